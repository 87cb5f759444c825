#ifndef SQUEEZESIM_DETECTION_HPP
#define SQUEEZESIM_DETECTION_HPP

#include <string>
#include <vector>

#include "squeezesim/decibel.hpp"

namespace squeezesim {

struct EfficiencyEntry {
  std::string label;
  double eta;  // in [0, 1]
};

/**
 * Measurement chain after the optics: stacked efficiencies, LO gain and
 * phase, and additive electronic dark noise.  Homodyne visibility enters as
 * an efficiency squared (mode-overlap power penalty), applied when the entry
 * is added.
 */
class DetectionChain {
 public:
  DetectionChain() = default;

  void add_efficiency(std::string label, double eta);
  /// Stores visibility^2 as the efficiency of this entry.
  void add_visibility(std::string label, double visibility);

  void set_dark_noise_snu(double snu);           // >= 0
  void set_dark_noise_db(double db_below_snl);   // e.g. -25
  void set_lo(double amplitude, double phase);   // amplitude > 0

  const std::vector<EfficiencyEntry>& efficiencies() const {
    return efficiencies_;
  }
  double dark_noise_snu() const { return dark_noise_snu_; }
  double lo_amplitude() const { return lo_amplitude_; }
  double lo_phase() const { return lo_phase_; }

 private:
  std::vector<EfficiencyEntry> efficiencies_;
  double dark_noise_snu_ = 0.0;
  double lo_amplitude_ = 1.0;
  double lo_phase_ = 1.5707963267948966;  // phase quadrature
};

/// Product of all efficiency entries (1 for an empty chain).
double effective_efficiency(const DetectionChain& chain);

/// eta v_in + (1 - eta) + dark, with eta the effective efficiency.  Dark
/// noise is added after the optical losses.
double measured_variance(double v_in_snu, const DetectionChain& chain);

/// Diagnostic raw (unnormalized) homodyne power, beta^2 v; cancels in all
/// SNU-normalized outputs.
double raw_power(double v_snu, const DetectionChain& chain);

/// One sweep over a frequency grid: noise floor, transduced signal, and
/// their sum, pointwise, in shot-noise units plus dB.
struct SpectrumResult {
  std::vector<double> grid;        // rad/s
  std::vector<double> floor_snu;
  std::vector<double> signal_snu;
  std::vector<double> total_snu;   // floor + signal
  std::vector<double> total_db;    // 10 log10(total_snu)
};

}  // namespace squeezesim

#endif
