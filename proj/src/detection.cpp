#include "squeezesim/detection.hpp"

#include <cmath>
#include <stdexcept>

namespace squeezesim {

void DetectionChain::add_efficiency(std::string label, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("add_efficiency: eta must be in (0, 1]");
  }
  efficiencies_.push_back(EfficiencyEntry{std::move(label), eta});
}

void DetectionChain::add_visibility(std::string label, double visibility) {
  if (!(visibility > 0.0 && visibility <= 1.0)) {
    throw std::invalid_argument("add_visibility: visibility must be in (0, 1]");
  }
  // Mode mismatch between signal and LO costs visibility^2 in power.
  efficiencies_.push_back(EfficiencyEntry{std::move(label), visibility * visibility});
}

void DetectionChain::set_dark_noise_snu(double dark) {
  if (dark < 0.0) {
    throw std::invalid_argument("set_dark_noise_snu: dark noise must be >= 0");
  }
  dark_noise_snu_ = dark;
}

void DetectionChain::set_dark_noise_db(double dark_db) {
  dark_noise_snu_ = std::pow(10.0, dark_db / 10.0);
}

void DetectionChain::set_lo(double amplitude, double phase) {
  if (amplitude <= 0.0) {
    throw std::invalid_argument("set_lo: amplitude must be positive");
  }
  lo_amplitude_ = amplitude;
  lo_phase_ = phase;
}

double effective_efficiency(const DetectionChain& chain) {
  double eta = 1.0;
  for (const EfficiencyEntry& e : chain.efficiencies()) {
    eta *= e.eta;
  }
  return eta;
}

double measured_variance(double v_in, const DetectionChain& chain) {
  const double eta = effective_efficiency(chain);
  return eta * v_in + (1.0 - eta) + chain.dark_noise_snu();
}

double raw_power(double v, const DetectionChain& chain) {
  return chain.lo_amplitude() * chain.lo_amplitude() * v;
}

}  // namespace squeezesim
