#include "squeezesim/sideband.hpp"

#include <cmath>
#include <stdexcept>

namespace squeezesim {

namespace {

// Joint quadrature of a sideband pair with coefficients (cu, pu, cl, pl) on
// (x_+, p_+, x_-, p_-), normalised so vacuum input gives unit variance:
// V = c^T cov c / 4 with |c|^2 = 4.
double joint_variance(const SidebandPair& p, double c0, double c1, double c2,
                      double c3) {
  Eigen::VectorXd c(4);
  c << c0, c1, c2, c3;
  return quadrature_variance(p.state, QuadratureForm(std::move(c))) / 4.0;
}

}  // namespace

SidebandPair::SidebandPair(double omega_in, GaussianState state_in,
                           double carrier_alpha_in)
    : omega(omega_in),
      state(std::move(state_in)),
      carrier_alpha(carrier_alpha_in) {
  if (omega <= 0.0) {
    throw std::invalid_argument("SidebandPair: omega must be positive");
  }
  if (state.n_modes() != 2) {
    throw std::invalid_argument("SidebandPair: state must have two modes");
  }
  if (carrier_alpha < 0.0) {
    throw std::invalid_argument("SidebandPair: carrier amplitude must be >= 0");
  }
}

SidebandPair prepare_pair(double omega, double r, double carrier_alpha) {
  GaussianState s = vacuum(2);
  if (r != 0.0) {
    s = two_mode_squeeze(s, 0, 1, r);
  }
  return SidebandPair(omega, std::move(s), carrier_alpha);
}

double joint_phase_variance(const SidebandPair& p) {
  // (p_+ + p_-)/sqrt(2) and (x_+ - x_-)/sqrt(2) pick out the EPR combination
  // read by a phase-quadrature homodyne at sideband frequency omega.
  const double vp = joint_variance(p, 0.0, 1.0, 0.0, 1.0);
  const double vx = joint_variance(p, 1.0, 0.0, -1.0, 0.0);
  return vp + vx;
}

double joint_amplitude_variance(const SidebandPair& p) {
  const double vx = joint_variance(p, 1.0, 0.0, 1.0, 0.0);
  const double vp = joint_variance(p, 0.0, 1.0, 0.0, -1.0);
  return vx + vp;
}

SidebandPair apply_symmetric_loss(const SidebandPair& p, double eta) {
  GaussianState s = loss(p.state, 0, eta);
  s = loss(s, 1, eta);
  return SidebandPair(p.omega, std::move(s), std::sqrt(eta) * p.carrier_alpha);
}

std::vector<ArcPoint> homodyne_arc(const SidebandPair& p,
                                   const std::vector<double>& thetas) {
  std::vector<ArcPoint> arc;
  arc.reserve(thetas.size());
  for (double theta : thetas) {
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    // Rotating the LO by theta reads the sideband combinations
    // cos(theta) amplitude + sin(theta) phase; the two orthogonal joint
    // quadratures below average to that homodyne variance.
    const double v1 = joint_variance(p, c, sn, c, sn);
    const double v2 = joint_variance(p, -sn, c, sn, -c);
    arc.push_back(ArcPoint{theta, v1 + v2});
  }
  return arc;
}

}  // namespace squeezesim
