#ifndef SQUEEZESIM_OPTOMECH_HPP
#define SQUEEZESIM_OPTOMECH_HPP

#include <complex>
#include <functional>
#include <vector>

#include "squeezesim/detection.hpp"
#include "squeezesim/sideband.hpp"

namespace squeezesim {

/// One Lorentzian vibration mode, parametrized by its displacement PSD at
/// resonance (the peak value, m^2/Hz).
struct MechanicalMode {
  MechanicalMode(double omega_m, double gamma_m, double s_x_peak);

  /// Thermal mode of effective mass m at temperature T; the peak PSD is
  /// 4 kB T / (m gamma_m omega_m^2), the value that makes the Lorentzian
  /// integrate to the equipartition variance kB T / (m omega_m^2).
  static MechanicalMode thermal(double omega_m, double gamma_m, double mass_kg,
                                double temperature_k);

  double omega_m;    // rad/s, > 0
  double gamma_m;    // rad/s FWHM, > 0
  double s_x_peak;   // m^2/Hz, >= 0
};

/// Optical resonator decay rates and detuning (all rad/s, kappa is FWHM).
struct CavityParams {
  CavityParams(double kappa, double kappa_ex, double detuning);

  double kappa;      // > 0
  double kappa_ex;   // in [0, kappa]
  double detuning;
};

/// Vacuum optomechanical coupling rate plus the zero-point length used to
/// nondimensionalize displacements (the modulation index mixes a rate with a
/// length, so the scale must be explicit).
struct OptomechCoupling {
  OptomechCoupling(double g0, double x_zpf);

  double g0;     // rad/s, >= 0
  double x_zpf;  // m, > 0
};

/// Phase-modulation index xi = g0 (delta_x / x_zpf) / omega_m.
double modulation_index(const OptomechCoupling& c, double delta_x,
                        double omega_m);

/// Optomechanical transduction: displaces each sideband mean by
/// xi carrier_alpha / sqrt(2) along the phase quadrature; covariance
/// unchanged.
SidebandPair transduce(const SidebandPair& p, double xi);

/// All-pass (single-port) resonator transmission
/// t(omega) = 1 - kappa_ex / (kappa/2 - i (detuning + omega)); |t| <= 1.
std::complex<double> cavity_transmission(const CavityParams& c, double omega);

/// Resonant probing (detuning must be 0): each sideband sees a loss channel
/// of efficiency |t(+/-omega)|^2 and a phase rotation arg t(+/-omega); the
/// carrier is attenuated by |t(0)|.
SidebandPair squeezing_after_cavity(const SidebandPair& p,
                                    const CavityParams& c);

/// Lorentzian displacement PSD
/// S_x(omega) = s_x_peak gamma^2 omega_m^2 / ((omega_m^2 - omega^2)^2
///              + gamma^2 omega^2), exactly s_x_peak at resonance.
double mechanical_psd(const MechanicalMode& m, double omega);

struct SqlNoise {
  double imprecision;
  double backaction;
  double total;
};

/// Total displacement-readout noise variance at photon number N:
/// a e^(-2r)/N + b e^(+2r) N.  Phase squeezing divides the imprecision term
/// by e^(2r) and multiplies the back-action term by e^(2r).
SqlNoise sql_total_noise(double n_photons, double r, double a, double b);

struct SqlOptimum {
  double n_star;
  double s_min;
};

/// Closed-form optimum of sql_total_noise: n_star = e^(-2r) sqrt(a/b),
/// s_min = 2 sqrt(ab) (independent of r).
SqlOptimum sql_optimum(double r, double a, double b);

using PairFactory = std::function<SidebandPair(double omega)>;

/**
 * Transduced homodyne spectrum over a frequency grid.  Per grid point:
 *   floor  = joint phase variance of factory(omega), through the chain;
 *   signal = eta_total 2 alpha^2 (g0/x_zpf)^2 sum_m S_x(omega) / omega^2,
 * with alpha the pair's carrier amplitude at that point.
 *
 * Grid points are evaluated independently (fanned out to worker threads,
 * capped by SQUEEZESIM_THREADS); results are bitwise independent of the
 * evaluation order.  Throws PhysicalityError if a factory state is
 * unphysical.
 */
SpectrumResult transduced_spectrum(const PairFactory& factory,
                                   const std::vector<MechanicalMode>& modes,
                                   const OptomechCoupling& coupling,
                                   const DetectionChain& chain,
                                   const std::vector<double>& grid);

}  // namespace squeezesim

#endif
