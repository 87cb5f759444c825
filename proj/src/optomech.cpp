#include "squeezesim/optomech.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "squeezesim/decibel.hpp"
#include "squeezesim/errors.hpp"

namespace squeezesim {

namespace {

constexpr double kBoltzmann = 1.380649e-23;  // J/K

int sweep_thread_count(size_t n_points) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) {
    n = 1;
  }
  if (const char* env = std::getenv("SQUEEZESIM_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      n = static_cast<unsigned>(parsed);
    }
  }
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<size_t>(n_points, 1)));
  return static_cast<int>(std::max(1u, n));
}

}  // namespace

MechanicalMode::MechanicalMode(double omega_m_in, double gamma_m_in,
                               double s_x_peak_in)
    : omega_m(omega_m_in), gamma_m(gamma_m_in), s_x_peak(s_x_peak_in) {
  if (omega_m <= 0.0) {
    throw std::invalid_argument("MechanicalMode: omega_m must be positive");
  }
  if (gamma_m <= 0.0) {
    throw std::invalid_argument("MechanicalMode: gamma_m must be positive");
  }
  if (s_x_peak < 0.0) {
    throw std::invalid_argument("MechanicalMode: s_x_peak must be >= 0");
  }
}

MechanicalMode MechanicalMode::thermal(double omega_m, double gamma_m,
                                       double mass_kg, double temperature_k) {
  if (mass_kg <= 0.0) {
    throw std::invalid_argument("MechanicalMode::thermal: mass must be positive");
  }
  if (temperature_k < 0.0) {
    throw std::invalid_argument(
        "MechanicalMode::thermal: temperature must be >= 0");
  }
  if (omega_m <= 0.0 || gamma_m <= 0.0) {
    throw std::invalid_argument(
        "MechanicalMode::thermal: omega_m and gamma_m must be positive");
  }
  const double s_peak = 4.0 * kBoltzmann * temperature_k /
                        (mass_kg * gamma_m * omega_m * omega_m);
  return MechanicalMode(omega_m, gamma_m, s_peak);
}

CavityParams::CavityParams(double kappa_in, double kappa_ex_in,
                           double detuning_in)
    : kappa(kappa_in), kappa_ex(kappa_ex_in), detuning(detuning_in) {
  if (kappa <= 0.0) {
    throw std::invalid_argument("CavityParams: kappa must be positive");
  }
  if (kappa_ex < 0.0 || kappa_ex > kappa) {
    throw std::invalid_argument("CavityParams: kappa_ex must be in [0, kappa]");
  }
}

OptomechCoupling::OptomechCoupling(double g0_in, double x_zpf_in)
    : g0(g0_in), x_zpf(x_zpf_in) {
  if (g0 < 0.0) {
    throw std::invalid_argument("OptomechCoupling: g0 must be >= 0");
  }
  if (x_zpf <= 0.0) {
    throw std::invalid_argument("OptomechCoupling: x_zpf must be positive");
  }
}

double modulation_index(const OptomechCoupling& c, double delta_x,
                        double omega_m) {
  if (omega_m <= 0.0) {
    throw std::invalid_argument("modulation_index: omega_m must be positive");
  }
  return c.g0 * (delta_x / c.x_zpf) / omega_m;
}

SidebandPair transduce(const SidebandPair& p, double xi) {
  const double dp = xi * p.carrier_alpha / std::sqrt(2.0);
  GaussianState s = displace(p.state, 0, 0.0, dp);
  s = displace(s, 1, 0.0, dp);
  return SidebandPair(p.omega, std::move(s), p.carrier_alpha);
}

std::complex<double> cavity_transmission(const CavityParams& c, double omega) {
  const std::complex<double> denom(0.5 * c.kappa, -(c.detuning + omega));
  return 1.0 - c.kappa_ex / denom;
}

SidebandPair squeezing_after_cavity(const SidebandPair& p,
                                    const CavityParams& c) {
  if (c.detuning != 0.0) {
    throw std::invalid_argument(
        "squeezing_after_cavity: only resonant probing (zero detuning) is "
        "supported");
  }
  const std::complex<double> t_upper = cavity_transmission(c, p.omega);
  const std::complex<double> t_lower = cavity_transmission(c, -p.omega);
  // |t| <= 1 analytically; clamp the square against roundoff so loss() never
  // sees eta just above 1.
  const double eta_upper = std::min(std::norm(t_upper), 1.0);
  const double eta_lower = std::min(std::norm(t_lower), 1.0);
  GaussianState s = loss(p.state, 0, eta_upper);
  s = loss(s, 1, eta_lower);
  s = phase_rotate(s, 0, std::arg(t_upper));
  s = phase_rotate(s, 1, std::arg(t_lower));
  const double carrier = std::abs(cavity_transmission(c, 0.0)) * p.carrier_alpha;
  return SidebandPair(p.omega, std::move(s), carrier);
}

double mechanical_psd(const MechanicalMode& m, double omega) {
  const double wm2 = m.omega_m * m.omega_m;
  const double w2 = omega * omega;
  const double g2 = m.gamma_m * m.gamma_m;
  const double det = (wm2 - w2) * (wm2 - w2) + g2 * w2;
  return m.s_x_peak * g2 * wm2 / det;
}

SqlNoise sql_total_noise(double n_photons, double r, double a, double b) {
  if (n_photons <= 0.0) {
    throw std::invalid_argument("sql_total_noise: photon number must be positive");
  }
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("sql_total_noise: a and b must be positive");
  }
  SqlNoise out;
  out.imprecision = a * std::exp(-2.0 * r) / n_photons;
  out.backaction = b * std::exp(2.0 * r) * n_photons;
  out.total = out.imprecision + out.backaction;
  return out;
}

SqlOptimum sql_optimum(double r, double a, double b) {
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("sql_optimum: a and b must be positive");
  }
  SqlOptimum out;
  out.n_star = std::exp(-2.0 * r) * std::sqrt(a / b);
  out.s_min = 2.0 * std::sqrt(a * b);
  return out;
}

SpectrumResult transduced_spectrum(const PairFactory& factory,
                                   const std::vector<MechanicalMode>& modes,
                                   const OptomechCoupling& coupling,
                                   const DetectionChain& chain,
                                   const std::vector<double>& grid) {
  if (!factory) {
    throw std::invalid_argument("transduced_spectrum: factory must be callable");
  }
  if (grid.empty()) {
    throw std::invalid_argument("transduced_spectrum: grid must be nonempty");
  }
  const size_t n = grid.size();
  SpectrumResult out;
  out.grid = grid;
  out.floor_snu.resize(n);
  out.signal_snu.resize(n);
  out.total_snu.resize(n);
  out.total_db.resize(n);

  const double eta = effective_efficiency(chain);
  const double gain = coupling.g0 / coupling.x_zpf;

  auto evaluate = [&](size_t k) {
    const double omega = grid[k];
    const SidebandPair pair = factory(omega);
    if (!is_physical(pair.state)) {
      throw PhysicalityError(
          "transduced_spectrum: factory produced an unphysical state at omega "
          "= " +
          std::to_string(omega));
    }
    out.floor_snu[k] = measured_variance(joint_phase_variance(pair), chain);
    double psd_sum = 0.0;
    for (const MechanicalMode& m : modes) {
      psd_sum += mechanical_psd(m, omega);
    }
    const double alpha = pair.carrier_alpha;
    out.signal_snu[k] =
        eta * 2.0 * alpha * alpha * gain * gain * psd_sum / (omega * omega);
    out.total_snu[k] = out.floor_snu[k] + out.signal_snu[k];
    out.total_db[k] = v_to_db(out.total_snu[k]);
  };

  const int n_threads = sweep_thread_count(n);
  if (n_threads == 1) {
    for (size_t k = 0; k < n; ++k) {
      evaluate(k);
    }
    return out;
  }

  std::vector<std::exception_ptr> errors(n_threads);
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (size_t k = t; k < n; k += n_threads) {
          evaluate(k);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) {
    w.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

}  // namespace squeezesim
