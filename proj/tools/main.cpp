#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "squeezesim/errors.hpp"
#include "squeezesim/scenarios.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  bool csv = false;
  bool no_dark = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "experiment config (JSON)")
      ->required();
  cmd->add_option("--out", args.out_dir,
                  "directory for CSV output (default: current directory)");
  cmd->add_flag("--csv", args.csv, "write CSV next to the console table");
  cmd->add_flag("--no-dark", args.no_dark, "drop detector dark noise");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squeezed-light displacement sensing: noise floors, spectra, "
               "SQL tradeoff, loss budget"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* characterize = app.add_subcommand(
      "characterize", "homodyne variance vs LO phase for the prepared state");
  CLI::App* spectrum = app.add_subcommand(
      "spectrum",
      "transduced displacement spectrum, coherent vs squeezed probe (always "
      "writes CSV)");
  CLI::App* sql = app.add_subcommand(
      "sql", "imprecision/back-action tradeoff vs photon number");
  CLI::App* budget = app.add_subcommand(
      "budget", "stage-by-stage erosion of the squeezing level");
  for (CLI::App* cmd : {characterize, spectrum, sql, budget}) {
    add_common(cmd, args);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  // Keep stdout pure data; diagnostics go to stderr.
  std::fprintf(stderr, "squeezesim %s\n", kVersion);

  try {
    const squeezesim::ExperimentConfig cfg =
        squeezesim::load_config(args.config_path);
    squeezesim::RunOptions opts;
    opts.include_dark = !args.no_dark;
    opts.out_dir = args.out_dir;

    std::vector<std::string> files;
    if (characterize->parsed()) {
      const auto res = squeezesim::run_characterize(cfg, opts);
      std::fputs(squeezesim::render_characterize(res).c_str(), stdout);
      if (args.csv) {
        files = squeezesim::write_csv_files(res, opts);
      }
    } else if (spectrum->parsed()) {
      const auto res = squeezesim::run_spectrum(cfg, opts);
      std::fputs(squeezesim::render_spectrum(res).c_str(), stdout);
      files = squeezesim::write_csv_files(res, opts);
    } else if (sql->parsed()) {
      const auto res = squeezesim::run_sql(cfg);
      std::fputs(squeezesim::render_sql(res).c_str(), stdout);
      if (args.csv) {
        files = squeezesim::write_csv_files(res, opts);
      }
    } else if (budget->parsed()) {
      const auto res = squeezesim::run_budget(cfg);
      std::fputs(squeezesim::render_budget(res).c_str(), stdout);
      if (args.csv) {
        files = squeezesim::write_csv_files(res, opts);
      }
    }
    for (const std::string& f : files) {
      std::fprintf(stderr, "wrote %s\n", f.c_str());
    }
    return 0;
  } catch (const squeezesim::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const squeezesim::PhysicalityError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
