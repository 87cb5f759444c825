#include "squeezesim/gaussian_state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace squeezesim {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

void check_mode(const GaussianState& s, int mode, const char* op) {
  if (mode < 0 || mode >= s.n_modes()) {
    throw std::out_of_range(std::string(op) + ": mode index out of range");
  }
}

// Embeds a 2x2 phase-space matrix acting on one mode.
Eigen::MatrixXd embed_one(int n_modes, int mode, const Eigen::Matrix2d& s) {
  Eigen::MatrixXd full = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  full.block<2, 2>(2 * mode, 2 * mode) = s;
  return full;
}

// Embeds a 4x4 phase-space matrix acting on modes (i, j), blocks ordered
// (x_i, p_i, x_j, p_j).
Eigen::MatrixXd embed_two(int n_modes, int i, int j, const Eigen::Matrix4d& s) {
  Eigen::MatrixXd full = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  full.block<2, 2>(2 * i, 2 * i) = s.block<2, 2>(0, 0);
  full.block<2, 2>(2 * i, 2 * j) = s.block<2, 2>(0, 2);
  full.block<2, 2>(2 * j, 2 * i) = s.block<2, 2>(2, 0);
  full.block<2, 2>(2 * j, 2 * j) = s.block<2, 2>(2, 2);
  return full;
}

Eigen::Matrix2d rotation2(double theta) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  Eigen::Matrix2d r;
  r << c, -sn, sn, c;
  return r;
}

}  // namespace

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : n_modes_(static_cast<int>(mean.size()) / 2),
      mean_(std::move(mean)),
      cov_(std::move(cov)) {
  if (mean_.size() < 2 || mean_.size() % 2 != 0) {
    throw std::invalid_argument(
        "GaussianState: mean length must be a positive even number");
  }
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw std::invalid_argument(
        "GaussianState: covariance dimensions must match the mean length");
  }
  cov_ = symmetrized(cov_);
}

GaussianState GaussianState::vacuum(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("vacuum: need at least one mode");
  }
  return GaussianState(Eigen::VectorXd::Zero(2 * n_modes),
                       Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::transformed(const Eigen::MatrixXd& s) const {
  if (s.rows() != 2 * n_modes_ || s.cols() != 2 * n_modes_) {
    throw std::invalid_argument("transformed: matrix size mismatch");
  }
  return GaussianState(s * mean_, symmetrized(s * cov_ * s.transpose()));
}

GaussianState GaussianState::displaced(const Eigen::VectorXd& delta) const {
  if (delta.size() != mean_.size()) {
    throw std::invalid_argument("displaced: vector size mismatch");
  }
  return GaussianState(mean_ + delta, cov_);
}

QuadratureForm::QuadratureForm(Eigen::VectorXd c) : coeffs(std::move(c)) {
  if (coeffs.size() == 0 || coeffs.norm() == 0.0) {
    throw std::invalid_argument("QuadratureForm: coefficients must be nonzero");
  }
}

QuadratureForm QuadratureForm::x_axis(int n_modes, int mode) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n_modes);
  c(2 * mode) = 1.0;
  return QuadratureForm(std::move(c));
}

QuadratureForm QuadratureForm::p_axis(int n_modes, int mode) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n_modes);
  c(2 * mode + 1) = 1.0;
  return QuadratureForm(std::move(c));
}

GaussianState vacuum(int n_modes) { return GaussianState::vacuum(n_modes); }

GaussianState squeeze(const GaussianState& s, int mode, double r,
                      double phase) {
  check_mode(s, mode, "squeeze");
  if (r < 0.0) {
    throw std::invalid_argument("squeeze: r must be >= 0");
  }
  Eigen::Matrix2d s0;
  s0 << std::exp(r), 0.0, 0.0, std::exp(-r);
  const Eigen::Matrix2d rot = rotation2(phase);
  return s.transformed(embed_one(s.n_modes(), mode, rot * s0 * rot.transpose()));
}

GaussianState two_mode_squeeze(const GaussianState& s, int i, int j,
                               double r) {
  check_mode(s, i, "two_mode_squeeze");
  check_mode(s, j, "two_mode_squeeze");
  if (i == j) {
    throw std::invalid_argument("two_mode_squeeze: modes must differ");
  }
  if (r < 0.0) {
    throw std::invalid_argument("two_mode_squeeze: r must be >= 0");
  }
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  // Cross block sign convention: sinh(r) diag(1, -1).
  Eigen::Matrix4d sm;
  sm << ch, 0, sh, 0,
        0, ch, 0, -sh,
        sh, 0, ch, 0,
        0, -sh, 0, ch;
  return s.transformed(embed_two(s.n_modes(), i, j, sm));
}

GaussianState displace(const GaussianState& s, int mode, double dx,
                       double dp) {
  check_mode(s, mode, "displace");
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(2 * s.n_modes());
  delta(2 * mode) = dx;
  delta(2 * mode + 1) = dp;
  return s.displaced(delta);
}

GaussianState phase_rotate(const GaussianState& s, int mode, double theta) {
  check_mode(s, mode, "phase_rotate");
  return s.transformed(embed_one(s.n_modes(), mode, rotation2(theta)));
}

GaussianState beamsplitter(const GaussianState& s, int i, int j,
                           double transmissivity) {
  check_mode(s, i, "beamsplitter");
  check_mode(s, j, "beamsplitter");
  if (i == j) {
    throw std::invalid_argument("beamsplitter: modes must differ");
  }
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw std::invalid_argument("beamsplitter: transmissivity must be in [0, 1]");
  }
  const double t = std::sqrt(transmissivity);
  const double rfl = std::sqrt(1.0 - transmissivity);
  Eigen::Matrix4d bs;
  bs << t, 0, rfl, 0,
        0, t, 0, rfl,
        -rfl, 0, t, 0,
        0, -rfl, 0, t;
  return s.transformed(embed_two(s.n_modes(), i, j, bs));
}

GaussianState loss(const GaussianState& s, int mode, double eta) {
  check_mode(s, mode, "loss");
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("loss: eta must be in [0, 1]");
  }
  const double root = std::sqrt(eta);
  Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2 * s.n_modes(), 2 * s.n_modes());
  x(2 * mode, 2 * mode) = root;
  x(2 * mode + 1, 2 * mode + 1) = root;
  Eigen::MatrixXd cov = x * s.cov() * x.transpose();
  cov(2 * mode, 2 * mode) += 1.0 - eta;
  cov(2 * mode + 1, 2 * mode + 1) += 1.0 - eta;
  return GaussianState(x * s.mean(), std::move(cov));
}

double quadrature_variance(const GaussianState& s, const QuadratureForm& q) {
  if (q.coeffs.size() != 2 * s.n_modes()) {
    throw std::invalid_argument("quadrature_variance: length mismatch");
  }
  return q.coeffs.dot(s.cov() * q.coeffs);
}

Eigen::VectorXd symplectic_eigenvalues(const GaussianState& s) {
  const int n = s.n_modes();
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int m = 0; m < n; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  // Eigenvalues of (Omega cov) come in pairs +/- i nu_k.  With cov = L L^T,
  // Omega cov is similar to the skew-symmetric K = L^T Omega L, whose
  // singular values are the nu_k in pairs.  The Cholesky route keeps all
  // rounding absolute in ||cov||: the nonsymmetric QR iteration on Omega cov
  // can fail outright on these purely imaginary near-degenerate spectra, and
  // an explicit symmetric root loses half the digits of the small
  // eigendirections of an ill-conditioned cov.
  Eigen::MatrixXd k;
  Eigen::LLT<Eigen::MatrixXd> llt(s.cov());
  if (llt.info() == Eigen::Success) {
    const Eigen::MatrixXd l = llt.matrixL();
    k = l.transpose() * omega * l;
  } else {
    // Semidefinite corner (a quadrature with zero variance): fall back to
    // the symmetric root with clamped eigenvalues.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> root(s.cov());
    const Eigen::MatrixXd a =
        root.eigenvectors() *
        root.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
        root.eigenvectors().transpose();
    k = a * omega * a;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(k);
  Eigen::VectorXd nu(n);
  for (int m = 0; m < n; ++m) {
    nu(m) = 0.5 * (svd.singularValues()(2 * m) +
                   svd.singularValues()(2 * m + 1));
  }
  nu.reverseInPlace();  // singular values come descending; report ascending
  return nu;
}

double purity(const GaussianState& s) {
  return 1.0 / std::sqrt(s.cov().determinant());
}

bool is_physical(const GaussianState& s, double tol) {
  return symplectic_eigenvalues(s).minCoeff() >= 1.0 - tol;
}

GaussianState tensor_product(const GaussianState& a, const GaussianState& b) {
  const int na = 2 * a.n_modes();
  const int nb = 2 * b.n_modes();
  Eigen::VectorXd mean(na + nb);
  mean << a.mean(), b.mean();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(na + nb, na + nb);
  cov.topLeftCorner(na, na) = a.cov();
  cov.bottomRightCorner(nb, nb) = b.cov();
  return GaussianState(std::move(mean), std::move(cov));
}

GaussianState reduced(const GaussianState& s, const std::vector<int>& modes) {
  if (modes.empty()) {
    throw std::invalid_argument("reduced: need at least one mode");
  }
  for (size_t a = 0; a < modes.size(); ++a) {
    check_mode(s, modes[a], "reduced");
    for (size_t b = a + 1; b < modes.size(); ++b) {
      if (modes[a] == modes[b]) {
        throw std::invalid_argument("reduced: duplicate mode index");
      }
    }
  }
  const int k = static_cast<int>(modes.size());
  Eigen::VectorXd mean(2 * k);
  Eigen::MatrixXd cov(2 * k, 2 * k);
  for (int a = 0; a < k; ++a) {
    mean.segment<2>(2 * a) = s.mean().segment<2>(2 * modes[a]);
    for (int b = 0; b < k; ++b) {
      cov.block<2, 2>(2 * a, 2 * b) =
          s.cov().block<2, 2>(2 * modes[a], 2 * modes[b]);
    }
  }
  return GaussianState(std::move(mean), std::move(cov));
}

}  // namespace squeezesim
