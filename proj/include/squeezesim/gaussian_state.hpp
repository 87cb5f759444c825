#ifndef SQUEEZESIM_GAUSSIAN_STATE_HPP
#define SQUEEZESIM_GAUSSIAN_STATE_HPP

#include <Eigen/Dense>
#include <vector>

namespace squeezesim {

/// Tolerance on the lowest admissible symplectic eigenvalue: a state is
/// physical when every symplectic eigenvalue is >= 1 - kPhysicalityTol.
inline constexpr double kPhysicalityTol = 1e-9;

/**
 * Gaussian state of n optical modes: mean quadrature vector plus covariance
 * matrix, both in shot-noise units (vacuum variance = 1).
 *
 * Quadrature ordering is x1, p1, x2, p2, ...  The covariance matrix is
 * re-symmetrized after every update.  States are immutable; every operation
 * returns a new value.
 */
class GaussianState {
 public:
  /// Builds a state from an explicit mean (length 2n) and covariance
  /// (2n x 2n).  The covariance is symmetrized; physicality is not checked
  /// here (see is_physical).
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  /// n-mode vacuum: zero mean, identity covariance.  Rejects n < 1.
  static GaussianState vacuum(int n_modes);

  int n_modes() const { return n_modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  /// cov -> S cov S^T, mean -> S mean, for a 2n x 2n phase-space matrix S.
  GaussianState transformed(const Eigen::MatrixXd& s) const;

  /// Same state with the mean shifted by delta (length 2n).
  GaussianState displaced(const Eigen::VectorXd& delta) const;

 private:
  int n_modes_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

/// Coefficients of a linear combination of quadratures, c . (x1,p1,...).
/// Must be nonzero; the length must match the state it is applied to.
struct QuadratureForm {
  explicit QuadratureForm(Eigen::VectorXd c);

  /// Unit form along the x (amplitude) axis of one mode.
  static QuadratureForm x_axis(int n_modes, int mode);
  /// Unit form along the p (phase) axis of one mode.
  static QuadratureForm p_axis(int n_modes, int mode);

  Eigen::VectorXd coeffs;
};

/// n-mode vacuum state (free-function spelling of GaussianState::vacuum).
GaussianState vacuum(int n_modes);

/// Single-mode squeezing by amplitude r >= 0.  For phase = 0 the p variance
/// of vacuum becomes e^(-2r) and the x variance e^(+2r); phase rotates the
/// squeezing ellipse.
GaussianState squeeze(const GaussianState& s, int mode, double r,
                      double phase = 0.0);

/// Two-mode squeezing of modes i != j by r >= 0.  On vacuum each reduced
/// single-mode covariance becomes cosh(2r) I and the cross block
/// sinh(2r) diag(1, -1).
GaussianState two_mode_squeeze(const GaussianState& s, int i, int j, double r);

/// Shifts the mean of one mode by (dx, dp); covariance untouched.
GaussianState displace(const GaussianState& s, int mode, double dx, double dp);

/// Rotation by theta in the (x, p) plane of one mode.
GaussianState phase_rotate(const GaussianState& s, int mode, double theta);

/// Two-mode beamsplitter of power transmissivity in [0, 1] on modes i != j.
GaussianState beamsplitter(const GaussianState& s, int i, int j,
                           double transmissivity);

/// Pure loss channel of efficiency eta in [0, 1] on one mode:
/// cov block -> eta V + (1 - eta) I, mean -> sqrt(eta) mean.
GaussianState loss(const GaussianState& s, int mode, double eta);

/// Variance q^T cov q of the quadrature combination q (vacuum with a
/// unit-norm q gives exactly 1 SNU).
double quadrature_variance(const GaussianState& s, const QuadratureForm& q);

/// Symplectic eigenvalues, ascending.  All >= 1 for a physical state.
Eigen::VectorXd symplectic_eigenvalues(const GaussianState& s);

/// 1 / sqrt(det cov); equals 1 for pure states.
double purity(const GaussianState& s);

/// True when min symplectic eigenvalue >= 1 - tol.
bool is_physical(const GaussianState& s, double tol = kPhysicalityTol);

/// Combined state of a followed by b (block-diagonal covariance).
GaussianState tensor_product(const GaussianState& a, const GaussianState& b);

/// State of the listed modes only (partial trace over the rest).  Indices
/// must be unique and in range.
GaussianState reduced(const GaussianState& s, const std::vector<int>& modes);

}  // namespace squeezesim

#endif
