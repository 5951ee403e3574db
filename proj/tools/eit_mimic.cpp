#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eit/bench.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  int jobs = -1;
  bool no_timing = false;
  bool check = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON run manifest (overrides the preset)");
  cmd->add_option("--out", opts.out_dir, "output directory for CSV/SVG files");
  cmd->add_option("--jobs", opts.jobs, "worker pool size (0 = hardware concurrency)");
  cmd->add_flag("--no-timing", opts.no_timing, "write 0 in the runtime column (deterministic output)");
  cmd->add_flag("--check", opts.check, "evaluate the pinned pass/fail conditions");
}

int run_experiment(const std::string& name, const CommonOptions& opts) {
  eit::bench::ExperimentConfig cfg;
  try {
    if (opts.config_path.empty()) {
      cfg = eit::bench::ExperimentConfig::preset(name);
    } else {
      std::ifstream stream(opts.config_path);
      if (!stream) {
        std::cerr << "error: cannot open config " << opts.config_path << "\n";
        return 2;
      }
      std::ostringstream text;
      text << stream.rdbuf();
      cfg = eit::bench::ExperimentConfig::from_json_text(text.str(), name);
      if (cfg.experiment != name && name != "custom") {
        std::cerr << "error: config experiment '" << cfg.experiment
                  << "' does not match subcommand '" << name << "'\n";
        return 2;
      }
    }
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (opts.jobs >= 0) cfg.jobs = opts.jobs;
    if (opts.no_timing) cfg.timing = false;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    const eit::bench::RunResult result = eit::bench::run(cfg);
    eit::bench::emit_outputs(result, cfg);
    std::cout << cfg.experiment << ": " << result.records.size() << " records -> " << cfg.out_dir
              << "/" << cfg.experiment << ".csv\n";
    if (result.threshold_elec1)
      std::cout << "threshold electrodes (half-coverage widths): " << *result.threshold_elec1
                << "\n";
    if (result.threshold_elec2)
      std::cout << "threshold electrodes (1/M^2 widths): " << *result.threshold_elec2 << "\n";

    if (opts.check) {
      const eit::bench::CheckOutcome outcome = eit::bench::check(cfg, result);
      for (const std::string& line : outcome.lines) std::cout << line << "\n";
      if (!outcome.passed) return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mimics relative continuum EIT measurements by electrode data and reproduces "
               "the convergence-rate experiments"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string selected;
  for (const char* name : {"fig1", "fig3", "discrepancy", "custom"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common(cmd, opts);
    cmd->callback([&selected, name] { selected = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run_experiment(selected, opts);
}
