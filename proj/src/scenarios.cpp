#include "squeezesim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "squeezesim/errors.hpp"

namespace squeezesim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string fmt(const char* f, const char* s) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, s);
  return buf;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

std::string csv_path(const RunOptions& opts, const char* name) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  return (fs::path(opts.out_dir) / name).string();
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("cannot write " + path);
  }
  return os;
}

}  // namespace

CharacterizeResult run_characterize(const ExperimentConfig& cfg,
                                    const RunOptions& opts) {
  // The arc itself is frequency independent (no resonator in this path); the
  // sideband frequency only labels the pair.
  const double omega = cfg.characterize_omega > 0.0 ? cfg.characterize_omega
                                                    : kTwoPi * 1.0e6;
  const SidebandPair pair = prepare_pair(omega, cfg.squeeze_r, 0.0);
  std::vector<double> thetas(cfg.arc_points);
  for (int k = 0; k < cfg.arc_points; ++k) {
    thetas[k] = kTwoPi * static_cast<double>(k) /
                static_cast<double>(cfg.arc_points - 1);
  }
  const std::vector<ArcPoint> arc = homodyne_arc(pair, thetas);
  const DetectionChain chain = build_chain(cfg, opts.include_dark);

  CharacterizeResult out;
  out.raw_power = cfg.characterize_raw_power;
  out.lo_amplitude = cfg.lo_amplitude;
  out.rows.reserve(arc.size());
  for (const ArcPoint& p : arc) {
    const double v = cfg.characterize_through_chain
                         ? measured_variance(p.variance, chain)
                         : p.variance;
    out.rows.push_back(CharacterizeRow{p.theta, v, v_to_db(v)});
  }
  out.min_db = out.rows.front().v_db;
  out.max_db = out.rows.front().v_db;
  for (const CharacterizeRow& row : out.rows) {
    out.min_db = std::min(out.min_db, row.v_db);
    out.max_db = std::max(out.max_db, row.v_db);
  }
  return out;
}

SpectrumScenarioResult run_spectrum(const ExperimentConfig& cfg,
                                    const RunOptions& opts) {
  const DetectionChain chain = build_chain(cfg, opts.include_dark);
  const std::vector<double> grid = frequency_grid(cfg);

  const auto factory_for = [&cfg](double r) {
    return PairFactory([&cfg, r](double omega) {
      return squeezing_after_cavity(prepare_pair(omega, r, cfg.carrier_alpha),
                                    cfg.cavity);
    });
  };

  SpectrumScenarioResult out;
  out.coherent = transduced_spectrum(factory_for(0.0), cfg.mechanical_modes,
                                     cfg.coupling, chain, grid);
  out.squeezed =
      transduced_spectrum(factory_for(cfg.squeeze_r), cfg.mechanical_modes,
                          cfg.coupling, chain, grid);
  out.dark_snu = chain.dark_noise_snu();
  out.floor_coherent_raw = mean_of(out.coherent.floor_snu);
  out.floor_squeezed_raw = mean_of(out.squeezed.floor_snu);
  out.floor_coherent_sub = out.floor_coherent_raw - out.dark_snu;
  out.floor_squeezed_sub = out.floor_squeezed_raw - out.dark_snu;
  out.enhancement_raw_db =
      enhancement_db(out.floor_coherent_raw, out.floor_squeezed_raw);
  out.enhancement_sub_db =
      enhancement_db(out.floor_coherent_sub, out.floor_squeezed_sub);
  return out;
}

SqlScenarioResult run_sql(const ExperimentConfig& cfg) {
  SqlScenarioResult out;
  out.a = cfg.sql_a;
  out.b = cfg.sql_b;
  out.r = cfg.squeeze_r;
  out.rows.reserve(cfg.sql_points);
  const double log_ratio = std::log(cfg.sql_n_max / cfg.sql_n_min);
  for (int k = 0; k < cfg.sql_points; ++k) {
    const double n =
        cfg.sql_n_min * std::exp(log_ratio * static_cast<double>(k) /
                                 static_cast<double>(cfg.sql_points - 1));
    const SqlNoise noise = sql_total_noise(n, cfg.squeeze_r, cfg.sql_a,
                                           cfg.sql_b);
    out.rows.push_back(
        SqlRow{n, noise.imprecision, noise.backaction, noise.total});
  }
  out.coherent_optimum = sql_optimum(0.0, cfg.sql_a, cfg.sql_b);
  out.squeezed_optimum = sql_optimum(cfg.squeeze_r, cfg.sql_a, cfg.sql_b);
  return out;
}

BudgetScenarioResult run_budget(const ExperimentConfig& cfg) {
  BudgetScenarioResult out;
  out.source_r = cfg.squeeze_r;
  double v = std::exp(-2.0 * cfg.squeeze_r);
  out.source_db = v_to_db(v);
  double prev_db = out.source_db;
  for (const EfficiencyEntry& stage : budget_stages(cfg)) {
    v = stage.eta * v + (1.0 - stage.eta);
    const double v_db = v_to_db(v);
    out.rows.push_back(
        BudgetRow{stage.label, stage.eta, v, v_db, v_db - prev_db});
    prev_db = v_db;
  }
  out.target_floor_db = cfg.budget_target_floor_db;
  if (cfg.budget_target_floor_db.has_value() && v < 1.0) {
    // Residual loss eta_u mapping the achieved floor onto the target:
    // 1 + eta_u (v - 1) = v_target.
    out.unattributed_eta = (db_to_v(*cfg.budget_target_floor_db) - 1.0) /
                           (v - 1.0);
  }
  return out;
}

std::string render_characterize(const CharacterizeResult& r) {
  std::string s = "characterize: " + std::to_string(r.rows.size()) +
                  " LO phase samples over [0, 2pi]\n";
  s += r.raw_power
           ? "     theta_rad         v_snu          v_db     raw_power\n"
           : "     theta_rad         v_snu          v_db\n";
  for (const CharacterizeRow& row : r.rows) {
    s += fmt("%14.6f", row.theta) + fmt("%14.6f", row.v_snu) +
         fmt("%14.6f", row.v_db);
    if (r.raw_power) {
      s += fmt("%14.6g", r.lo_amplitude * r.lo_amplitude * row.v_snu);
    }
    s += "\n";
  }
  s += "min " + fmt("%.6f", r.min_db) + " dB, max " + fmt("%.6f", r.max_db) +
       " dB\n";
  return s;
}

std::string render_spectrum(const SpectrumScenarioResult& r) {
  const size_t n = r.coherent.grid.size();
  std::string s = "spectrum: " + std::to_string(n) + " points, " +
                  fmt("%.6g", r.coherent.grid.front() / kTwoPi) + " .. " +
                  fmt("%.6g", r.coherent.grid.back() / kTwoPi) + " Hz\n";
  s += "  dark noise:                          " + fmt("%.6f", r.dark_snu) +
       " snu\n";
  s += "  coherent floor (raw):                " +
       fmt("%.6f", r.floor_coherent_raw) + " snu (" +
       fmt("%.6f", v_to_db(r.floor_coherent_raw)) + " dB)\n";
  s += "  squeezed floor (raw):                " +
       fmt("%.6f", r.floor_squeezed_raw) + " snu (" +
       fmt("%.6f", v_to_db(r.floor_squeezed_raw)) + " dB)\n";
  s += "  coherent floor (dark subtracted):    " +
       fmt("%.6f", r.floor_coherent_sub) + " snu (" +
       fmt("%.6f", v_to_db(r.floor_coherent_sub)) + " dB)\n";
  s += "  squeezed floor (dark subtracted):    " +
       fmt("%.6f", r.floor_squeezed_sub) + " snu (" +
       fmt("%.6f", v_to_db(r.floor_squeezed_sub)) + " dB)\n";
  s += "  floor difference (raw):              " +
       fmt("%.6f", r.enhancement_raw_db) + " dB\n";
  s += "  floor difference (dark subtracted):  " +
       fmt("%.6f", r.enhancement_sub_db) + " dB\n";
  return s;
}

std::string render_sql(const SqlScenarioResult& r) {
  std::string s = "sql: a = " + fmt("%.6g", r.a) + ", b = " + fmt("%.6g", r.b) +
                  ", r = " + fmt("%.6g", r.r) + "\n";
  s += "     n_photons   imprecision    backaction         total\n";
  for (const SqlRow& row : r.rows) {
    s += fmt("%14.6g", row.n_photons) + fmt("%14.6g", row.imprecision) +
         fmt("%14.6g", row.backaction) + fmt("%14.6g", row.total) + "\n";
  }
  s += "coherent optimum: n_star = " + fmt("%.9g", r.coherent_optimum.n_star) +
       ", s_min = " + fmt("%.9g", r.coherent_optimum.s_min) + "\n";
  s += "squeezed optimum: n_star = " + fmt("%.9g", r.squeezed_optimum.n_star) +
       ", s_min = " + fmt("%.9g", r.squeezed_optimum.s_min) + "\n";
  return s;
}

std::string render_budget(const BudgetScenarioResult& r) {
  std::string s = "budget: source r = " + fmt("%.6g", r.source_r) + " (" +
                  fmt("%.6f", r.source_db) + " dB)\n";
  s += "  stage                        eta         v_snu          v_db    erosion_db\n";
  s += "  " + fmt("%-20s", "source") + fmt("%11s", "-") +
       fmt("%14.6f", std::exp(-2.0 * r.source_r)) +
       fmt("%14.6f", r.source_db) + fmt("%14s", "-") + "\n";
  for (const BudgetRow& row : r.rows) {
    s += "  " + fmt("%-20s", row.label.c_str()) + fmt("%11.6f", row.eta) +
         fmt("%14.6f", row.v_snu) + fmt("%14.6f", row.v_db) +
         fmt("%14.6f", row.erosion_db) + "\n";
  }
  if (r.target_floor_db.has_value()) {
    s += "target floor: " + fmt("%.6g", *r.target_floor_db) + " dB\n";
    if (r.unattributed_eta.has_value()) {
      s += "residual efficiency to target: " +
           fmt("%.6f", *r.unattributed_eta) + "\n";
      if (*r.unattributed_eta > 1.0) {
        s += "  (exceeds 1: the target floor is deeper than the modeled "
             "chain reaches)\n";
      }
    } else {
      s += "residual efficiency to target: undefined (no squeezing left at "
           "the final stage)\n";
    }
  }
  return s;
}

void write_characterize_csv(const CharacterizeResult& r, std::ostream& os) {
  os << (r.raw_power ? "theta_rad,v_snu,v_db,raw_power\n"
                     : "theta_rad,v_snu,v_db\n");
  for (const CharacterizeRow& row : r.rows) {
    os << fmt("%.12g", row.theta) << ',' << fmt("%.12g", row.v_snu) << ','
       << fmt("%.12g", row.v_db);
    if (r.raw_power) {
      os << ','
         << fmt("%.12g", r.lo_amplitude * r.lo_amplitude * row.v_snu);
    }
    os << '\n';
  }
}

void write_spectrum_csv(const SpectrumResult& r, std::ostream& os) {
  os << "omega_hz,floor_snu,signal_snu,total_snu,total_db\n";
  for (size_t k = 0; k < r.grid.size(); ++k) {
    os << fmt("%.12g", r.grid[k] / kTwoPi) << ','
       << fmt("%.12g", r.floor_snu[k]) << ',' << fmt("%.12g", r.signal_snu[k])
       << ',' << fmt("%.12g", r.total_snu[k]) << ','
       << fmt("%.12g", r.total_db[k]) << '\n';
  }
}

void write_sql_csv(const SqlScenarioResult& r, std::ostream& os) {
  os << "n_photons,imprecision_snu,backaction_snu,total_snu\n";
  for (const SqlRow& row : r.rows) {
    os << fmt("%.12g", row.n_photons) << ',' << fmt("%.12g", row.imprecision)
       << ',' << fmt("%.12g", row.backaction) << ','
       << fmt("%.12g", row.total) << '\n';
  }
}

void write_budget_csv(const BudgetScenarioResult& r, std::ostream& os) {
  os << "stage,eta,v_snu,v_db,erosion_db\n";
  os << "source,1," << fmt("%.12g", std::exp(-2.0 * r.source_r)) << ','
     << fmt("%.12g", r.source_db) << ",0\n";
  for (const BudgetRow& row : r.rows) {
    os << row.label << ',' << fmt("%.12g", row.eta) << ','
       << fmt("%.12g", row.v_snu) << ',' << fmt("%.12g", row.v_db) << ','
       << fmt("%.12g", row.erosion_db) << '\n';
  }
}

std::vector<std::string> write_csv_files(const CharacterizeResult& r,
                                         const RunOptions& opts) {
  const std::string path = csv_path(opts, "characterize.csv");
  std::ofstream os = open_csv(path);
  write_characterize_csv(r, os);
  return {path};
}

std::vector<std::string> write_csv_files(const SpectrumScenarioResult& r,
                                         const RunOptions& opts) {
  const std::string coherent = csv_path(opts, "spectrum_coherent.csv");
  const std::string squeezed = csv_path(opts, "spectrum_squeezed.csv");
  {
    std::ofstream os = open_csv(coherent);
    write_spectrum_csv(r.coherent, os);
  }
  {
    std::ofstream os = open_csv(squeezed);
    write_spectrum_csv(r.squeezed, os);
  }
  return {coherent, squeezed};
}

std::vector<std::string> write_csv_files(const SqlScenarioResult& r,
                                         const RunOptions& opts) {
  const std::string path = csv_path(opts, "sql.csv");
  std::ofstream os = open_csv(path);
  write_sql_csv(r, os);
  return {path};
}

std::vector<std::string> write_csv_files(const BudgetScenarioResult& r,
                                         const RunOptions& opts) {
  const std::string path = csv_path(opts, "budget.csv");
  std::ofstream os = open_csv(path);
  write_budget_csv(r, os);
  return {path};
}

}  // namespace squeezesim
