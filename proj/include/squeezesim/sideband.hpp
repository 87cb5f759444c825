#ifndef SQUEEZESIM_SIDEBAND_HPP
#define SQUEEZESIM_SIDEBAND_HPP

#include <vector>

#include "squeezesim/gaussian_state.hpp"

namespace squeezesim {

/**
 * Two sideband modes at +/- omega around a coherent carrier.  Mode 0 is the
 * upper sideband, mode 1 the lower.  carrier_alpha is the SNU-normalized
 * carrier amplitude.
 */
struct SidebandPair {
  SidebandPair(double omega, GaussianState state, double carrier_alpha);

  double omega;         // rad/s, > 0
  GaussianState state;  // exactly 2 modes
  double carrier_alpha; // >= 0
};

/// Phase-squeezed vacuum sideband pair: two-mode squeezed vacuum oriented so
/// that V((p+ + p-)/sqrt2) = V((x+ - x-)/sqrt2) = e^(-2r).  r = 0 gives
/// vacuum sidebands.
SidebandPair prepare_pair(double omega, double r, double carrier_alpha);

/// Normalized joint phase-quadrature variance
/// (V(p+ + p-) + V(x+ - x-)) / 4; vacuum sidebands give exactly 1 SNU.
double joint_phase_variance(const SidebandPair& p);

/// Conjugate combination (V(x+ + x-) + V(p+ - p-)) / 4, anti-squeezed for a
/// phase-squeezed pair.
double joint_amplitude_variance(const SidebandPair& p);

/// Loss of efficiency eta on both sidebands; carrier -> sqrt(eta) carrier.
SidebandPair apply_symmetric_loss(const SidebandPair& p, double eta);

struct ArcPoint {
  double theta;
  double variance;  // SNU
};

/// Joint homodyne variance while sweeping the LO phase: at each theta the
/// measured quadrature is X(theta) = X1 cos(theta) + X2 sin(theta) of both
/// sidebands jointly.
std::vector<ArcPoint> homodyne_arc(const SidebandPair& p,
                                   const std::vector<double>& thetas);

}  // namespace squeezesim

#endif
