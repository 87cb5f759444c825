#include "squeezesim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "squeezesim/errors.hpp"

namespace squeezesim {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586476925287;

// Unknown keys are deliberately ignored everywhere so configs can carry
// free-form notes and metadata next to the numbers.

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

const json* find_object(const json& obj, const char* key,
                        const std::string& path) {
  const json* v = find(obj, key);
  if (v != nullptr && !v->is_object()) {
    throw ConfigError(path, "must be an object");
  }
  return v;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw ConfigError(path, "must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError(path, "must be finite");
  }
  return x;
}

double require_number(const json& obj, const char* key,
                      const std::string& path) {
  const json* v = find(obj, key);
  if (v == nullptr) {
    throw ConfigError(path, "is required");
  }
  return as_number(*v, path);
}

double number_or(const json& obj, const char* key, const std::string& path,
                 double fallback) {
  const json* v = find(obj, key);
  return v == nullptr ? fallback : as_number(*v, path);
}

int int_or(const json& obj, const char* key, const std::string& path,
           int fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) {
    return fallback;
  }
  if (!v->is_number_integer()) {
    throw ConfigError(path, "must be an integer");
  }
  return v->get<int>();
}

bool bool_or(const json& obj, const char* key, const std::string& path,
             bool fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) {
    return fallback;
  }
  if (!v->is_boolean()) {
    throw ConfigError(path, "must be a boolean");
  }
  return v->get<bool>();
}

void check_unit_interval(double x, const std::string& path) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw ConfigError(path, "must be in (0, 1]");
  }
}

void parse_squeezing(const json& root, ExperimentConfig& cfg) {
  const json* sq = find_object(root, "squeezing", "squeezing");
  if (sq == nullptr) {
    return;
  }
  const json* r = find(*sq, "r");
  const json* db = find(*sq, "db");
  if (r != nullptr && db != nullptr) {
    throw ConfigError("squeezing", "give either r or db, not both");
  }
  if (r == nullptr && db == nullptr) {
    throw ConfigError("squeezing", "one of r or db is required");
  }
  if (r != nullptr) {
    cfg.squeeze_r = as_number(*r, "squeezing.r");
    if (cfg.squeeze_r < 0.0) {
      throw ConfigError("squeezing.r", "must be >= 0");
    }
  } else {
    const double level = as_number(*db, "squeezing.db");
    if (level > 0.0) {
      throw ConfigError("squeezing.db",
                        "must be <= 0 (a squeezed variance level)");
    }
    cfg.squeeze_r = db_to_r(level);
  }
  if (const json* ref = find(*sq, "reference")) {
    if (!ref->is_string()) {
      throw ConfigError("squeezing.reference", "must be a string");
    }
    const std::string name = ref->get<std::string>();
    if (name == "homodyne_input") {
      cfg.squeezing_reference = SqueezingReference::homodyne_input;
    } else if (name == "source") {
      cfg.squeezing_reference = SqueezingReference::source;
    } else {
      throw ConfigError("squeezing.reference",
                        "must be \"homodyne_input\" or \"source\"");
    }
  }
}

void parse_cavity(const json& root, ExperimentConfig& cfg) {
  const json* cav = find_object(root, "cavity", "cavity");
  if (cav == nullptr) {
    return;
  }
  const double kappa = require_number(*cav, "kappa_hz", "cavity.kappa_hz");
  if (kappa <= 0.0) {
    throw ConfigError("cavity.kappa_hz", "must be positive");
  }
  const double kappa_ex =
      number_or(*cav, "kappa_ex_hz", "cavity.kappa_ex_hz", 0.0);
  if (kappa_ex < 0.0 || kappa_ex > kappa) {
    throw ConfigError("cavity.kappa_ex_hz", "must be in [0, kappa_hz]");
  }
  const double detuning =
      number_or(*cav, "detuning_hz", "cavity.detuning_hz", 0.0);
  if (detuning != 0.0) {
    throw ConfigError("cavity.detuning_hz",
                      "only resonant probing (0) is supported");
  }
  cfg.cavity = CavityParams(kTwoPi * kappa, kTwoPi * kappa_ex,
                            kTwoPi * detuning);
}

void parse_coupling(const json& root, ExperimentConfig& cfg) {
  const json* cp = find_object(root, "coupling", "coupling");
  if (cp == nullptr) {
    return;
  }
  const double g0 = require_number(*cp, "g0_hz", "coupling.g0_hz");
  if (g0 < 0.0) {
    throw ConfigError("coupling.g0_hz", "must be >= 0");
  }
  const double x_zpf = require_number(*cp, "x_zpf_m", "coupling.x_zpf_m");
  if (x_zpf <= 0.0) {
    throw ConfigError("coupling.x_zpf_m", "must be positive");
  }
  cfg.coupling = OptomechCoupling(kTwoPi * g0, x_zpf);
}

void parse_modes(const json& root, ExperimentConfig& cfg) {
  const json* arr = find(root, "mechanical_modes");
  if (arr == nullptr) {
    return;
  }
  if (!arr->is_array()) {
    throw ConfigError("mechanical_modes", "must be an array");
  }
  for (size_t i = 0; i < arr->size(); ++i) {
    const std::string path = "mechanical_modes[" + std::to_string(i) + "]";
    const json& m = (*arr)[i];
    if (!m.is_object()) {
      throw ConfigError(path, "must be an object");
    }
    const double omega_m =
        require_number(m, "omega_m_hz", path + ".omega_m_hz");
    if (omega_m <= 0.0) {
      throw ConfigError(path + ".omega_m_hz", "must be positive");
    }
    const double gamma_m =
        require_number(m, "gamma_m_hz", path + ".gamma_m_hz");
    if (gamma_m <= 0.0) {
      throw ConfigError(path + ".gamma_m_hz", "must be positive");
    }
    const json* peak = find(m, "s_x_peak_m2_per_hz");
    const json* mass = find(m, "mass_kg");
    const json* temp = find(m, "temperature_k");
    if (peak != nullptr && (mass != nullptr || temp != nullptr)) {
      throw ConfigError(
          path, "give either s_x_peak_m2_per_hz or mass_kg + temperature_k");
    }
    if (peak != nullptr) {
      const double s_peak = as_number(*peak, path + ".s_x_peak_m2_per_hz");
      if (s_peak < 0.0) {
        throw ConfigError(path + ".s_x_peak_m2_per_hz", "must be >= 0");
      }
      cfg.mechanical_modes.emplace_back(kTwoPi * omega_m, kTwoPi * gamma_m,
                                        s_peak);
    } else if (mass != nullptr && temp != nullptr) {
      const double mass_kg = as_number(*mass, path + ".mass_kg");
      if (mass_kg <= 0.0) {
        throw ConfigError(path + ".mass_kg", "must be positive");
      }
      const double temperature = as_number(*temp, path + ".temperature_k");
      if (temperature < 0.0) {
        throw ConfigError(path + ".temperature_k", "must be >= 0");
      }
      cfg.mechanical_modes.push_back(MechanicalMode::thermal(
          kTwoPi * omega_m, kTwoPi * gamma_m, mass_kg, temperature));
    } else {
      throw ConfigError(
          path, "needs s_x_peak_m2_per_hz or both mass_kg and temperature_k");
    }
  }
}

void parse_chain(const json& root, ExperimentConfig& cfg) {
  const json* ch = find_object(root, "chain", "chain");
  if (ch == nullptr) {
    return;
  }
  if (const json* arr = find(*ch, "efficiencies")) {
    if (!arr->is_array()) {
      throw ConfigError("chain.efficiencies", "must be an array");
    }
    for (size_t i = 0; i < arr->size(); ++i) {
      const std::string path =
          "chain.efficiencies[" + std::to_string(i) + "]";
      const json& e = (*arr)[i];
      if (!e.is_object()) {
        throw ConfigError(path, "must be an object");
      }
      const json* label = find(e, "label");
      if (label == nullptr || !label->is_string() ||
          label->get<std::string>().empty()) {
        throw ConfigError(path + ".label", "must be a nonempty string");
      }
      if (label->get<std::string>().find(',') != std::string::npos) {
        throw ConfigError(path + ".label",
                          "must not contain commas (labels end up in CSV)");
      }
      const double eta = require_number(e, "eta", path + ".eta");
      check_unit_interval(eta, path + ".eta");
      cfg.chain_entries.push_back(
          EfficiencyEntry{label->get<std::string>(), eta});
    }
  }
  cfg.visibility = number_or(*ch, "visibility", "chain.visibility", 1.0);
  check_unit_interval(cfg.visibility, "chain.visibility");
  cfg.quantum_efficiency = number_or(*ch, "quantum_efficiency",
                                     "chain.quantum_efficiency", 1.0);
  check_unit_interval(cfg.quantum_efficiency, "chain.quantum_efficiency");
  cfg.dark_noise_db =
      number_or(*ch, "dark_noise_db", "chain.dark_noise_db", cfg.dark_noise_db);
}

void parse_lo(const json& root, ExperimentConfig& cfg) {
  const json* lo = find_object(root, "local_oscillator", "local_oscillator");
  if (lo == nullptr) {
    return;
  }
  cfg.lo_amplitude =
      number_or(*lo, "amplitude", "local_oscillator.amplitude", 1.0);
  if (cfg.lo_amplitude <= 0.0) {
    throw ConfigError("local_oscillator.amplitude", "must be positive");
  }
  cfg.lo_phase =
      number_or(*lo, "phase_rad", "local_oscillator.phase_rad", cfg.lo_phase);
}

void parse_grid(const json& root, ExperimentConfig& cfg) {
  const json* grid = find_object(root, "grid", "grid");
  if (grid == nullptr) {
    return;
  }
  const double omega_min =
      require_number(*grid, "omega_min_hz", "grid.omega_min_hz");
  const double omega_max =
      require_number(*grid, "omega_max_hz", "grid.omega_max_hz");
  if (omega_min <= 0.0) {
    throw ConfigError("grid.omega_min_hz", "must be positive");
  }
  if (omega_max <= omega_min) {
    throw ConfigError("grid.omega_max_hz", "must exceed omega_min_hz");
  }
  cfg.grid_points = int_or(*grid, "points", "grid.points", 0);
  if (cfg.grid_points < 2) {
    throw ConfigError("grid.points", "must be >= 2");
  }
  cfg.grid_omega_min = kTwoPi * omega_min;
  cfg.grid_omega_max = kTwoPi * omega_max;
}

void parse_characterize(const json& root, ExperimentConfig& cfg) {
  const json* ch = find_object(root, "characterize", "characterize");
  if (ch == nullptr) {
    return;
  }
  const double omega_hz =
      number_or(*ch, "omega_hz", "characterize.omega_hz", 0.0);
  if (omega_hz < 0.0) {
    throw ConfigError("characterize.omega_hz", "must be >= 0");
  }
  cfg.characterize_omega = kTwoPi * omega_hz;
  cfg.arc_points = int_or(*ch, "arc_points", "characterize.arc_points", 181);
  if (cfg.arc_points < 2) {
    throw ConfigError("characterize.arc_points", "must be >= 2");
  }
  cfg.characterize_through_chain =
      bool_or(*ch, "through_chain", "characterize.through_chain", false);
  cfg.characterize_raw_power =
      bool_or(*ch, "raw_power", "characterize.raw_power", false);
}

void parse_sql(const json& root, ExperimentConfig& cfg) {
  const json* s = find_object(root, "sql", "sql");
  if (s == nullptr) {
    return;
  }
  cfg.sql_a = number_or(*s, "a", "sql.a", 1.0);
  if (cfg.sql_a <= 0.0) {
    throw ConfigError("sql.a", "must be positive");
  }
  cfg.sql_b = number_or(*s, "b", "sql.b", 1.0);
  if (cfg.sql_b <= 0.0) {
    throw ConfigError("sql.b", "must be positive");
  }
  cfg.sql_n_min = number_or(*s, "n_min", "sql.n_min", 0.01);
  if (cfg.sql_n_min <= 0.0) {
    throw ConfigError("sql.n_min", "must be positive");
  }
  cfg.sql_n_max = number_or(*s, "n_max", "sql.n_max", 100.0);
  if (cfg.sql_n_max <= cfg.sql_n_min) {
    throw ConfigError("sql.n_max", "must exceed n_min");
  }
  cfg.sql_points = int_or(*s, "points", "sql.points", 41);
  if (cfg.sql_points < 2) {
    throw ConfigError("sql.points", "must be >= 2");
  }
}

void parse_budget(const json& root, ExperimentConfig& cfg) {
  const json* b = find_object(root, "budget", "budget");
  if (b == nullptr) {
    return;
  }
  if (const json* target = find(*b, "target_floor_db")) {
    const double t = as_number(*target, "budget.target_floor_db");
    if (t >= 0.0) {
      throw ConfigError("budget.target_floor_db",
                        "must be negative (below shot noise)");
    }
    cfg.budget_target_floor_db = t;
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config", "top level must be an object");
  }

  ExperimentConfig cfg;
  parse_squeezing(root, cfg);
  if (const json* carrier = find_object(root, "carrier", "carrier")) {
    cfg.carrier_alpha = number_or(*carrier, "alpha", "carrier.alpha", 0.0);
    if (cfg.carrier_alpha < 0.0) {
      throw ConfigError("carrier.alpha", "must be >= 0");
    }
  }
  parse_cavity(root, cfg);
  parse_coupling(root, cfg);
  parse_modes(root, cfg);
  parse_chain(root, cfg);
  parse_lo(root, cfg);
  parse_grid(root, cfg);
  parse_characterize(root, cfg);
  parse_sql(root, cfg);
  parse_budget(root, cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("config", "cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

DetectionChain build_chain(const ExperimentConfig& cfg, bool include_dark) {
  DetectionChain chain;
  for (const EfficiencyEntry& e : cfg.chain_entries) {
    chain.add_efficiency(e.label, e.eta);
  }
  if (cfg.squeezing_reference == SqueezingReference::source) {
    chain.add_visibility("visibility", cfg.visibility);
    chain.add_efficiency("quantum_efficiency", cfg.quantum_efficiency);
  }
  if (include_dark) {
    chain.set_dark_noise_db(cfg.dark_noise_db);
  }
  chain.set_lo(cfg.lo_amplitude, cfg.lo_phase);
  return chain;
}

std::vector<EfficiencyEntry> budget_stages(const ExperimentConfig& cfg) {
  std::vector<EfficiencyEntry> stages = cfg.chain_entries;
  if (cfg.squeezing_reference == SqueezingReference::source) {
    stages.push_back(
        EfficiencyEntry{"visibility", cfg.visibility * cfg.visibility});
    stages.push_back(
        EfficiencyEntry{"quantum_efficiency", cfg.quantum_efficiency});
  }
  return stages;
}

std::vector<double> frequency_grid(const ExperimentConfig& cfg) {
  if (cfg.grid_points < 2) {
    throw ConfigError("grid.points", "a frequency grid needs >= 2 points");
  }
  std::vector<double> grid(cfg.grid_points);
  const double step = (cfg.grid_omega_max - cfg.grid_omega_min) /
                      static_cast<double>(cfg.grid_points - 1);
  for (int k = 0; k < cfg.grid_points; ++k) {
    grid[k] = cfg.grid_omega_min + step * static_cast<double>(k);
  }
  return grid;
}

}  // namespace squeezesim
