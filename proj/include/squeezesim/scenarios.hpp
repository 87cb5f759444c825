#ifndef SQUEEZESIM_SCENARIOS_HPP
#define SQUEEZESIM_SCENARIOS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "squeezesim/config.hpp"

namespace squeezesim {

struct RunOptions {
  bool include_dark = true;      // --no-dark clears this
  std::string out_dir = ".";
};

// ---------------------------------------------------------------- characterize

struct CharacterizeRow {
  double theta;
  double v_snu;
  double v_db;
};

struct CharacterizeResult {
  std::vector<CharacterizeRow> rows;
  double min_db = 0.0;
  double max_db = 0.0;
  bool raw_power = false;
  double lo_amplitude = 1.0;
};

CharacterizeResult run_characterize(const ExperimentConfig& cfg,
                                    const RunOptions& opts);

// ------------------------------------------------------------------- spectrum

struct SpectrumScenarioResult {
  SpectrumResult coherent;   // r = 0 probe
  SpectrumResult squeezed;   // configured r
  double dark_snu = 0.0;
  // Grid-averaged noise floors, raw and with dark noise subtracted.
  double floor_coherent_raw = 1.0;
  double floor_squeezed_raw = 1.0;
  double floor_coherent_sub = 1.0;
  double floor_squeezed_sub = 1.0;
  double enhancement_raw_db = 0.0;
  double enhancement_sub_db = 0.0;
};

SpectrumScenarioResult run_spectrum(const ExperimentConfig& cfg,
                                    const RunOptions& opts);

// ------------------------------------------------------------------------ sql

struct SqlRow {
  double n_photons;
  double imprecision;
  double backaction;
  double total;
};

struct SqlScenarioResult {
  double a = 1.0;
  double b = 1.0;
  double r = 0.0;
  std::vector<SqlRow> rows;          // at the configured r
  SqlOptimum coherent_optimum{0, 0}; // r = 0
  SqlOptimum squeezed_optimum{0, 0}; // configured r
};

SqlScenarioResult run_sql(const ExperimentConfig& cfg);

// --------------------------------------------------------------------- budget

struct BudgetRow {
  std::string label;
  double eta;
  double v_snu;       // squeezed variance after this stage
  double v_db;
  double erosion_db;  // dB of squeezing lost at this stage (>= 0)
};

struct BudgetScenarioResult {
  double source_r = 0.0;
  double source_db = 0.0;
  std::vector<BudgetRow> rows;
  std::optional<double> target_floor_db;
  // Residual efficiency that maps the final stage onto the target floor;
  // > 1 means the target is deeper than the achieved floor.
  std::optional<double> unattributed_eta;
};

BudgetScenarioResult run_budget(const ExperimentConfig& cfg);

// ------------------------------------------------------------------ rendering

std::string render_characterize(const CharacterizeResult& r);
std::string render_spectrum(const SpectrumScenarioResult& r);
std::string render_sql(const SqlScenarioResult& r);
std::string render_budget(const BudgetScenarioResult& r);

void write_characterize_csv(const CharacterizeResult& r, std::ostream& os);
void write_spectrum_csv(const SpectrumResult& r, std::ostream& os);
void write_sql_csv(const SqlScenarioResult& r, std::ostream& os);
void write_budget_csv(const BudgetScenarioResult& r, std::ostream& os);

/// Writes the scenario's CSV file(s) into opts.out_dir; returns the paths.
std::vector<std::string> write_csv_files(const CharacterizeResult& r,
                                         const RunOptions& opts);
std::vector<std::string> write_csv_files(const SpectrumScenarioResult& r,
                                         const RunOptions& opts);
std::vector<std::string> write_csv_files(const SqlScenarioResult& r,
                                         const RunOptions& opts);
std::vector<std::string> write_csv_files(const BudgetScenarioResult& r,
                                         const RunOptions& opts);

}  // namespace squeezesim

#endif
