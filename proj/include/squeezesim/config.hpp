#ifndef SQUEEZESIM_CONFIG_HPP
#define SQUEEZESIM_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "squeezesim/detection.hpp"
#include "squeezesim/optomech.hpp"

namespace squeezesim {

/// Where the configured squeezing level is referenced.
///  - homodyne_input: the value measured at the homodyne detector; the
///    visibility and quantum-efficiency factors are already inside it and
///    only the explicit efficiency entries are applied to noise floors.
///  - source: the value at the squeezing source; visibility^2 and quantum
///    efficiency are appended to the applied chain.
enum class SqueezingReference { homodyne_input, source };

/// Validated experiment description.  All frequencies are stored in rad/s
/// (config files quote Hz through *_hz keys; conversion happens on load).
struct ExperimentConfig {
  double squeeze_r = 0.0;
  SqueezingReference squeezing_reference = SqueezingReference::homodyne_input;
  double carrier_alpha = 0.0;

  CavityParams cavity{1.0, 0.0, 0.0};
  OptomechCoupling coupling{0.0, 1.0};
  std::vector<MechanicalMode> mechanical_modes;

  std::vector<EfficiencyEntry> chain_entries;  // excluding visibility / QE
  double visibility = 1.0;
  double quantum_efficiency = 1.0;
  double dark_noise_db = -25.0;  // dB below SNL; disable at runtime if unwanted
  double lo_amplitude = 1.0;
  double lo_phase = 1.5707963267948966;

  double grid_omega_min = 0.0;  // rad/s
  double grid_omega_max = 0.0;
  int grid_points = 0;

  // characterize scenario
  int arc_points = 181;
  double characterize_omega = 0.0;  // rad/s
  bool characterize_through_chain = false;
  bool characterize_raw_power = false;

  // sql scenario
  double sql_a = 1.0;
  double sql_b = 1.0;
  double sql_n_min = 0.01;
  double sql_n_max = 100.0;
  int sql_points = 41;

  // budget scenario
  std::optional<double> budget_target_floor_db;
};

/// Parses and validates a JSON config file.  Throws ConfigError naming the
/// offending field on any violation.
ExperimentConfig load_config(const std::string& path);

/// Same, from an in-memory JSON document.
ExperimentConfig parse_config(const std::string& json_text);

/// Detection chain implied by the config under its squeezing reference:
/// the explicit entries, plus visibility^2 and quantum efficiency when the
/// reference is `source`.  Dark noise is included unless disabled.
DetectionChain build_chain(const ExperimentConfig& cfg, bool include_dark);

/// The same efficiency stack as an ordered stage list (no dark noise), as
/// used by the budget scenario.
std::vector<EfficiencyEntry> budget_stages(const ExperimentConfig& cfg);

/// Uniform frequency grid in rad/s from the config's Hz-quoted bounds.
std::vector<double> frequency_grid(const ExperimentConfig& cfg);

}  // namespace squeezesim

#endif
