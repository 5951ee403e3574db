#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eit/cem.hpp"
#include "eit/conformal.hpp"
#include "eit/forward_disk.hpp"

namespace eit::bench {

enum class WidthLaw { kHalfCoverage, kInverseMSquared, kFixed };
enum class Model { kPem, kCem };

/// Electrode width for the named law: half-coverage d = pi/(2M+1),
/// inverse-M-squared d = pi/(M(2M+1)), or the fixed value.
double width_for(WidthLaw law, int M, double fixed_width);

using Geometry = std::variant<ConcentricConductivity, DiskInclusion>;

struct CheckTolerances {
  double slope_elec1 = -2.0, slope_elec1_tol = 0.3;
  double slope_elec2 = -4.0, slope_elec2_tol = 0.3;
  int threshold_elec1 = 80, threshold_elec2 = 33;
  double threshold_rel_tol = 0.2;
  double fig3_err_at_top = 1e-12;
  double discrepancy_slope = 2.0, discrepancy_slope_tol = 0.2;
};

/// Declarative run configuration; presets reproduce the published experiments
/// and a JSON manifest (plus CLI flags) can override any field.
struct ExperimentConfig {
  std::string experiment;  // fig1 | fig3 | discrepancy | custom
  Geometry geometry = ConcentricConductivity(0.5, 0.9);
  std::vector<int> modes{1, 2, 4, 8};
  std::vector<int> orders;            // M values, ascending
  Complex impedance{1.0, 0.0};
  WidthLaw width_law = WidthLaw::kHalfCoverage;
  double fixed_width = 0.05;
  std::vector<double> widths;         // discrepancy d sweep
  int discrepancy_order = 4;          // fixed M for the d sweep
  Model model = Model::kPem;          // custom runs
  double threshold_target = 0.01;
  int threshold_max_order = 64;
  bool run_thresholds = false;
  std::string out_dir = "out";
  bool timing = true;
  int jobs = 0;                       // 0 = hardware concurrency
  CheckTolerances check;

  static ExperimentConfig preset(const std::string& name);
  /// Parses a JSON manifest on top of the preset selected by its
  /// "experiment" field (or the explicit preset name).
  static ExperimentConfig from_json_text(const std::string& text,
                                         const std::string& preset_name);
  void validate() const;
};

struct ConvergenceRecord {
  std::string experiment;
  int M = 0;
  int mode = 0;
  double err = 0.0;
  double runtime_s = 0.0;
};

struct RunResult {
  std::vector<ConvergenceRecord> records;
  // Threshold electrode counts 2M+1 found by run_fig1 (per width law).
  std::optional<int> threshold_elec1, threshold_elec2;
};

/// Least-squares slope of log err against log M.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);
/// The subset of points in the top half of the log-M range, the regime the
/// asymptotic rates refer to.
std::vector<std::pair<double, double>> top_half(const std::vector<std::pair<double, double>>& pts);

/// Relative error of the mimicking pipeline for one (geometry, model, mode,
/// order) cell; the CLI adds no computation beyond these library calls.
double err_for(const Geometry& geometry, Model model, int n, int M, WidthLaw law,
               double fixed_width, Complex z);

RunResult run_fig1(const ExperimentConfig& cfg);
RunResult run_fig3(const ExperimentConfig& cfg);
RunResult run_discrepancy(const ExperimentConfig& cfg);
RunResult run_custom(const ExperimentConfig& cfg);
RunResult run(const ExperimentConfig& cfg);

/// Smallest electrode count 2M+1 with err_n < target for every requested
/// mode, scanned upward from M = 2.
int threshold_electrode_count(WidthLaw law, const ConcentricConductivity& c, Complex z,
                              const std::vector<int>& modes, double target, int max_order,
                              int jobs);

/// CSV serialization with header experiment,M,n,err,runtime_s; the runtime
/// column is written as 0 when timing is disabled.
std::string to_csv(const std::vector<ConvergenceRecord>& records, bool timing);

/// Writes <experiment>.csv plus one SVG per experiment label under
/// cfg.out_dir.  I/O failures carry the offending path.
void emit_outputs(const RunResult& result, const ExperimentConfig& cfg);

struct CheckOutcome {
  bool passed = true;
  std::vector<std::string> lines;
};

/// Evaluates the pinned pass/fail conditions for the preset experiments.
CheckOutcome check(const ExperimentConfig& cfg, const RunResult& result);

}  // namespace eit::bench
