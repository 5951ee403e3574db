#include "eit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "eit/svg.hpp"
#include "json.hpp"

namespace eit::bench {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int effective_jobs(int jobs, std::size_t tasks) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  return static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks, 1)));
}

void parallel_run(std::vector<std::function<void()>> tasks, int jobs) {
  jobs = effective_jobs(jobs, tasks.size());
  if (jobs == 1) {
    for (auto& task : tasks) task();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string format_double(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

const ConcentricConductivity& concentric_of(const Geometry& g, const char* what) {
  if (const auto* c = std::get_if<ConcentricConductivity>(&g)) return *c;
  throw std::invalid_argument(std::string(what) + ": a concentric conductivity is required");
}

const DiskInclusion& inclusion_of(const Geometry& g, const char* what) {
  if (const auto* inc = std::get_if<DiskInclusion>(&g)) return *inc;
  throw std::invalid_argument(std::string(what) + ": a nonconcentric inclusion is required");
}

void sort_records(std::vector<ConvergenceRecord>& records) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.experiment, a.M, a.mode) < std::tie(b.experiment, b.M, b.mode);
  });
}

std::vector<std::pair<double, double>> series_points(const std::vector<ConvergenceRecord>& records,
                                                     const std::string& label, int mode) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records)
    if (r.experiment == label && r.mode == mode) pts.emplace_back(r.M, r.err);
  return pts;
}

// Asymptotic slope: fit over the top half of the M range when it holds enough
// points, over everything otherwise.
double asymptotic_slope(const std::vector<std::pair<double, double>>& pts) {
  const auto top = top_half(pts);
  return fit_loglog_slope(top.size() >= 2 ? top : pts);
}

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#e6b117", "#cc2fcb",
                               "#2ca02c", "#8c564b", "#7f7f7f", "#17becf"};

}  // namespace

double width_for(WidthLaw law, int M, double fixed_width) {
  switch (law) {
    case WidthLaw::kHalfCoverage: return kPi / (2 * M + 1);
    case WidthLaw::kInverseMSquared: return kPi / (static_cast<double>(M) * (2 * M + 1));
    case WidthLaw::kFixed: return fixed_width;
  }
  throw std::logic_error("width_for: unknown width law");
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("fit_loglog_slope: need at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("fit_loglog_slope: nonpositive sample");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(points.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<std::pair<double, double>> top_half(
    const std::vector<std::pair<double, double>>& pts) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& [x, y] : pts) {
    lo = first ? x : std::min(lo, x);
    hi = first ? x : std::max(hi, x);
    first = false;
  }
  const double cut = std::sqrt(lo * hi) * (1.0 - 1e-12);
  std::vector<std::pair<double, double>> out;
  for (const auto& p : pts)
    if (p.first >= cut) out.push_back(p);
  return out;
}

double err_for(const Geometry& geometry, Model model, int n, int M, WidthLaw law,
               double fixed_width, Complex z) {
  if (model == Model::kPem) {
    if (const auto* c = std::get_if<ConcentricConductivity>(&geometry)) return err_rel_pem(n, M, *c);
    return err_rel_pem(n, M, std::get<DiskInclusion>(geometry));
  }
  const auto& c = concentric_of(geometry, "err_for: CEM pipeline");
  return err_rel_cem(n, M, width_for(law, M, fixed_width), z, c);
}

RunResult run_fig1(const ExperimentConfig& cfg) {
  const ConcentricConductivity& c = concentric_of(cfg.geometry, "run_fig1");
  struct Cell {
    WidthLaw law;
    std::string label;
    int M;
    std::vector<double> errs;
    double seconds = 0.0;
  };
  std::vector<Cell> cells;
  for (const auto& [law, label] : {std::pair{WidthLaw::kHalfCoverage, std::string("fig1-elec1")},
                                   std::pair{WidthLaw::kInverseMSquared, std::string("fig1-elec2")}})
    for (int M : cfg.orders) cells.push_back(Cell{law, label, M, {}, 0.0});

  std::vector<std::function<void()>> tasks;
  tasks.reserve(cells.size());
  for (Cell& cell : cells)
    tasks.push_back([&cell, &cfg, &c] {
      const Timer timer;
      cell.errs = err_rel_cem(cfg.modes, cell.M, width_for(cell.law, cell.M, cfg.fixed_width),
                              cfg.impedance, c);
      cell.seconds = timer.seconds();
    });
  parallel_run(std::move(tasks), cfg.jobs);

  RunResult result;
  for (const Cell& cell : cells)
    for (std::size_t i = 0; i < cfg.modes.size(); ++i)
      result.records.push_back(ConvergenceRecord{cell.label, cell.M, cfg.modes[i], cell.errs[i],
                                                 cell.seconds / cfg.modes.size()});
  sort_records(result.records);

  if (cfg.run_thresholds) {
    result.threshold_elec1 =
        threshold_electrode_count(WidthLaw::kHalfCoverage, c, cfg.impedance, cfg.modes,
                                  cfg.threshold_target, cfg.threshold_max_order, cfg.jobs);
    result.threshold_elec2 =
        threshold_electrode_count(WidthLaw::kInverseMSquared, c, cfg.impedance, cfg.modes,
                                  cfg.threshold_target, cfg.threshold_max_order, cfg.jobs);
  }
  return result;
}

RunResult run_fig3(const ExperimentConfig& cfg) {
  const DiskInclusion& inc = inclusion_of(cfg.geometry, "run_fig3");
  struct Row {
    int mode;
    std::vector<double> errs;
    std::vector<double> seconds;
  };
  std::vector<Row> rows;
  for (int n : cfg.modes) rows.push_back(Row{n, {}, {}});

  std::vector<std::function<void()>> tasks;
  for (Row& row : rows)
    tasks.push_back([&row, &cfg, &inc] {
      const TrigCoeffs f = TrigCoeffs::monomial(row.mode);
      const TrigCoeffs exact = relative_cm(f, inc);
      for (int M : cfg.orders) {
        const Timer timer;
        const TrigCoeffs approx = upsilon_m_general(f, M, MobiusMap{}, inc);
        row.errs.push_back(relative_l2_error(exact, approx));
        row.seconds.push_back(timer.seconds());
      }
    });
  parallel_run(std::move(tasks), cfg.jobs);

  RunResult result;
  for (const Row& row : rows)
    for (std::size_t i = 0; i < cfg.orders.size(); ++i)
      result.records.push_back(
          ConvergenceRecord{"fig3", cfg.orders[i], row.mode, row.errs[i], row.seconds[i]});
  sort_records(result.records);
  return result;
}

RunResult run_discrepancy(const ExperimentConfig& cfg) {
  const ConcentricConductivity& c = concentric_of(cfg.geometry, "run_discrepancy");
  struct Cell {
    std::string label;
    int M;
    double width;
    double value = 0.0;
    double seconds = 0.0;
  };
  std::vector<Cell> cells;
  for (double d : cfg.widths)
    cells.push_back(Cell{"discrepancy-d=" + format_double("%g", d), cfg.discrepancy_order, d});
  for (int M : cfg.orders) cells.push_back(Cell{"discrepancy-msweep", M, cfg.fixed_width});

  std::vector<std::function<void()>> tasks;
  for (Cell& cell : cells)
    tasks.push_back([&cell, &cfg, &c] {
      const Timer timer;
      cell.value = discrepancy_opnorm(cell.M, cell.width, c, cfg.impedance);
      cell.seconds = timer.seconds();
    });
  parallel_run(std::move(tasks), cfg.jobs);

  RunResult result;
  for (const Cell& cell : cells)
    result.records.push_back(ConvergenceRecord{cell.label, cell.M, 0, cell.value, cell.seconds});
  sort_records(result.records);
  return result;
}

RunResult run_custom(const ExperimentConfig& cfg) {
  struct Cell {
    int M;
    std::vector<double> errs;
    double seconds = 0.0;
  };
  std::vector<Cell> cells;
  for (int M : cfg.orders) cells.push_back(Cell{M, {}, 0.0});

  std::vector<std::function<void()>> tasks;
  for (Cell& cell : cells)
    tasks.push_back([&cell, &cfg] {
      const Timer timer;
      for (int n : cfg.modes)
        cell.errs.push_back(err_for(cfg.geometry, cfg.model, n, cell.M, cfg.width_law,
                                    cfg.fixed_width, cfg.impedance));
      cell.seconds = timer.seconds();
    });
  parallel_run(std::move(tasks), cfg.jobs);

  RunResult result;
  for (const Cell& cell : cells)
    for (std::size_t i = 0; i < cfg.modes.size(); ++i)
      result.records.push_back(ConvergenceRecord{"custom", cell.M, cfg.modes[i], cell.errs[i],
                                                 cell.seconds / cfg.modes.size()});
  sort_records(result.records);
  return result;
}

RunResult run(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment == "fig1") return run_fig1(cfg);
  if (cfg.experiment == "fig3") return run_fig3(cfg);
  if (cfg.experiment == "discrepancy") return run_discrepancy(cfg);
  if (cfg.experiment == "custom") return run_custom(cfg);
  throw std::invalid_argument("run: unknown experiment '" + cfg.experiment + "'");
}

int threshold_electrode_count(WidthLaw law, const ConcentricConductivity& c, Complex z,
                              const std::vector<int>& modes, double target, int max_order,
                              int jobs) {
  const int chunk = std::max(effective_jobs(jobs, 8), 2);
  for (int base = 2; base <= max_order; base += chunk) {
    const int last = std::min(base + chunk - 1, max_order);
    std::vector<char> ok(static_cast<std::size_t>(last - base + 1), 0);
    std::vector<std::function<void()>> tasks;
    for (int M = base; M <= last; ++M)
      tasks.push_back([&, M] {
        const std::vector<double> errs = err_rel_cem(modes, M, width_for(law, M, 0.0), z, c);
        ok[static_cast<std::size_t>(M - base)] =
            std::all_of(errs.begin(), errs.end(), [target](double e) { return e < target; });
      });
    parallel_run(std::move(tasks), jobs);
    for (int M = base; M <= last; ++M)
      if (ok[static_cast<std::size_t>(M - base)]) return 2 * M + 1;
  }
  throw std::runtime_error("threshold_electrode_count: target not reached within the order cap");
}

std::string to_csv(const std::vector<ConvergenceRecord>& records, bool timing) {
  std::string out = "experiment,M,n,err,runtime_s\n";
  for (const auto& r : records) {
    out += r.experiment + "," + std::to_string(r.M) + "," + std::to_string(r.mode) + "," +
           format_double("%.12e", r.err) + ",";
    out += timing ? format_double("%.6f", r.runtime_s) : std::string("0");
    out += "\n";
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("emit_outputs: cannot open " + path.string());
  stream << contents;
  if (!stream) throw std::runtime_error("emit_outputs: write failed for " + path.string());
}

}  // namespace

void emit_outputs(const RunResult& result, const ExperimentConfig& cfg) {
  const std::filesystem::path dir(cfg.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("emit_outputs: cannot create " + dir.string());

  write_file(dir / (cfg.experiment + ".csv"), to_csv(result.records, cfg.timing));

  std::vector<std::string> labels;
  for (const auto& r : result.records)
    if (std::find(labels.begin(), labels.end(), r.experiment) == labels.end())
      labels.push_back(r.experiment);

  if (cfg.experiment == "discrepancy") {
    std::vector<svg::Series> sweep;
    svg::Series dseries{"opnorm vs d", kSeriesColors[0], {}, ""};
    for (double d : cfg.widths) {
      const std::string label = "discrepancy-d=" + format_double("%g", d);
      for (const auto& r : result.records)
        if (r.experiment == label) dseries.points.emplace_back(d, r.err);
    }
    if (dseries.points.size() >= 2)
      dseries.annotation = "slope " + format_double("%.2f", fit_loglog_slope(dseries.points));
    sweep.push_back(std::move(dseries));
    write_file(dir / "discrepancy-dsweep.svg",
               svg::render_loglog("CEM-PEM discrepancy vs electrode width", "d",
                                  "operator norm", sweep));

    std::vector<std::pair<double, double>> mpts;
    for (const auto& r : result.records)
      if (r.experiment == "discrepancy-msweep") mpts.emplace_back(r.M, r.err);
    if (!mpts.empty()) {
      std::vector<svg::Series> msweep{{"opnorm vs M", kSeriesColors[1], mpts, ""}};
      write_file(dir / "discrepancy-msweep.svg",
                 svg::render_loglog("CEM-PEM discrepancy vs electrode count", "M",
                                    "operator norm", msweep));
    }
    return;
  }

  for (const std::string& label : labels) {
    std::vector<svg::Series> series;
    int color = 0;
    for (int n : cfg.modes) {
      svg::Series s{"n=" + std::to_string(n), kSeriesColors[color % 8],
                    series_points(result.records, label, n), ""};
      if (s.points.size() >= 2)
        s.annotation = "slope " + format_double("%.2f", asymptotic_slope(s.points));
      if (!s.points.empty()) series.push_back(std::move(s));
      ++color;
    }
    if (series.empty()) continue;
    write_file(dir / (label + ".svg"),
               svg::render_loglog(label + ": relative L2 error", "M", "err_n(M)", series));
  }
}

CheckOutcome check(const ExperimentConfig& cfg, const RunResult& result) {
  CheckOutcome outcome;
  auto report = [&outcome](bool ok, const std::string& text) {
    outcome.passed = outcome.passed && ok;
    outcome.lines.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + text);
  };

  if (cfg.experiment == "fig1") {
    const CheckTolerances& t = cfg.check;
    for (const auto& [label, target, tol] :
         {std::tuple{std::string("fig1-elec1"), t.slope_elec1, t.slope_elec1_tol},
          std::tuple{std::string("fig1-elec2"), t.slope_elec2, t.slope_elec2_tol}})
      for (int n : cfg.modes) {
        const double slope = asymptotic_slope(series_points(result.records, label, n));
        report(std::abs(slope - target) <= tol,
               label + " slope n=" + std::to_string(n) + ": " + format_double("%.3f", slope) +
                   " (target " + format_double("%.1f", target) + " +/- " +
                   format_double("%.1f", tol) + ")");
      }
    for (const auto& [threshold, target] :
         {std::pair{result.threshold_elec1, t.threshold_elec1},
          std::pair{result.threshold_elec2, t.threshold_elec2}}) {
      if (!threshold) continue;
      report(std::abs(*threshold - target) <= t.threshold_rel_tol * target,
             "electrode count for err < " + format_double("%g", cfg.threshold_target) + ": " +
                 std::to_string(*threshold) + " (target " + std::to_string(target) + " +/- 20%)");
    }
  } else if (cfg.experiment == "fig3") {
    const int top = cfg.orders.back();
    for (int n : cfg.modes) {
      const auto pts = series_points(result.records, "fig3", n);
      const double err_top = pts.back().second;
      report(err_top < cfg.check.fig3_err_at_top,
             "fig3 err n=" + std::to_string(n) + " at M=" + std::to_string(top) + ": " +
                 format_double("%.3e", err_top) + " (target < " +
                 format_double("%.0e", cfg.check.fig3_err_at_top) + ")");

      std::vector<int> shape_orders{4, 8, 16, 32, 64};
      const bool have_all = std::all_of(shape_orders.begin(), shape_orders.end(), [&](int M) {
        return std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return p.first == M; });
      });
      if (!have_all) {
        shape_orders.clear();
        for (const auto& p : pts) shape_orders.push_back(static_cast<int>(p.first));
      }
      bool concave = true;
      double prev_slope = 0.0;
      for (std::size_t i = 0; i + 1 < shape_orders.size(); ++i) {
        double e0 = 0.0, e1 = 0.0;
        for (const auto& p : pts) {
          if (p.first == shape_orders[i]) e0 = p.second;
          if (p.first == shape_orders[i + 1]) e1 = p.second;
        }
        const double slope =
            std::log(e1 / e0) / std::log(static_cast<double>(shape_orders[i + 1]) / shape_orders[i]);
        if (i > 0 && !(slope < prev_slope)) concave = false;
        prev_slope = slope;
      }
      report(concave, "fig3 n=" + std::to_string(n) + ": successive log-log slopes strictly decreasing");
    }
  } else if (cfg.experiment == "discrepancy") {
    std::vector<std::pair<double, double>> pts;
    for (double d : cfg.widths) {
      const std::string label = "discrepancy-d=" + format_double("%g", d);
      for (const auto& r : result.records)
        if (r.experiment == label) pts.emplace_back(d, r.err);
    }
    const double slope = fit_loglog_slope(pts);
    report(std::abs(slope - cfg.check.discrepancy_slope) <= cfg.check.discrepancy_slope_tol,
           "discrepancy d-slope: " + format_double("%.3f", slope) + " (target " +
               format_double("%.1f", cfg.check.discrepancy_slope) + " +/- " +
               format_double("%.1f", cfg.check.discrepancy_slope_tol) + ")");
  } else {
    outcome.lines.push_back("[PASS] custom experiment: no pinned checks");
  }
  return outcome;
}

ExperimentConfig ExperimentConfig::preset(const std::string& name) {
  ExperimentConfig cfg;
  cfg.experiment = name;
  if (name == "fig1") {
    cfg.geometry = ConcentricConductivity(0.5, 0.9);
    cfg.orders = {2, 3, 4, 6, 8, 11, 16, 22, 32, 45, 64};
    cfg.run_thresholds = true;
  } else if (name == "fig3") {
    cfg.geometry = DiskInclusion(Complex{-0.4, 0.2}, 0.4, 0.5);
    cfg.orders = {2, 3, 4, 6, 8, 11, 16, 22, 32, 45, 64};
    cfg.model = Model::kPem;
  } else if (name == "discrepancy") {
    cfg.geometry = ConcentricConductivity(0.5, 0.5);
    cfg.widths = {0.2, 0.1, 0.05, 0.025};
    cfg.orders = {2, 3, 4, 6, 8};
    cfg.fixed_width = 0.05;
    cfg.modes.clear();
  } else if (name == "custom") {
    cfg.orders = {2, 4, 8, 16};
  } else {
    throw std::invalid_argument("ExperimentConfig::preset: unknown experiment '" + name + "'");
  }
  return cfg;
}

namespace {

Complex parse_complex(const nlohmann::json& v, const char* what) {
  if (v.is_number()) return Complex{v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return Complex{v[0].get<double>(), v[1].get<double>()};
  throw std::invalid_argument(std::string(what) + ": expected a number or [re, im]");
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text,
                                                  const std::string& preset_name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  std::string name = preset_name;
  if (j.contains("experiment")) name = j["experiment"].get<std::string>();
  ExperimentConfig cfg = preset(name);

  static const char* kKnown[] = {"experiment", "kappa",       "R",          "center",
                                 "rho",        "modes",       "orders",     "impedance",
                                 "width_law",  "fixed_width", "widths",     "model",
                                 "threshold_target", "threshold_max_M", "run_thresholds",
                                 "out",        "jobs",        "discrepancy_order"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw std::invalid_argument("config: unknown key '" + key + "'");
  }

  const bool nonconcentric = j.contains("center") || j.contains("rho");
  if (nonconcentric) {
    Complex center{-0.4, 0.2};
    double rho = 0.4, kappa = 0.5;
    if (const auto* inc = std::get_if<DiskInclusion>(&cfg.geometry)) {
      center = inc->center;
      rho = inc->radius;
      kappa = inc->kappa;
    }
    if (j.contains("center")) center = parse_complex(j["center"], "config center");
    if (j.contains("rho")) rho = j["rho"].get<double>();
    if (j.contains("kappa")) kappa = j["kappa"].get<double>();
    cfg.geometry = DiskInclusion(center, rho, kappa);
  } else if (j.contains("kappa") || j.contains("R")) {
    double kappa = 0.5, radius = 0.9;
    if (const auto* c = std::get_if<ConcentricConductivity>(&cfg.geometry)) {
      kappa = c->kappa;
      radius = c->radius;
    }
    if (j.contains("kappa")) kappa = j["kappa"].get<double>();
    if (j.contains("R")) radius = j["R"].get<double>();
    cfg.geometry = ConcentricConductivity(kappa, radius);
  }

  if (j.contains("modes")) cfg.modes = j["modes"].get<std::vector<int>>();
  if (j.contains("orders")) cfg.orders = j["orders"].get<std::vector<int>>();
  if (j.contains("impedance")) cfg.impedance = parse_complex(j["impedance"], "config impedance");
  if (j.contains("width_law")) {
    const std::string law = j["width_law"].get<std::string>();
    if (law == "half-coverage") cfg.width_law = WidthLaw::kHalfCoverage;
    else if (law == "inverse-M-squared") cfg.width_law = WidthLaw::kInverseMSquared;
    else if (law == "fixed") cfg.width_law = WidthLaw::kFixed;
    else throw std::invalid_argument("config: unknown width_law '" + law + "'");
  }
  if (j.contains("fixed_width")) cfg.fixed_width = j["fixed_width"].get<double>();
  if (j.contains("widths")) cfg.widths = j["widths"].get<std::vector<double>>();
  if (j.contains("model")) {
    const std::string model = j["model"].get<std::string>();
    if (model == "pem") cfg.model = Model::kPem;
    else if (model == "cem") cfg.model = Model::kCem;
    else throw std::invalid_argument("config: unknown model '" + model + "'");
  }
  if (j.contains("threshold_target")) cfg.threshold_target = j["threshold_target"].get<double>();
  if (j.contains("threshold_max_M")) cfg.threshold_max_order = j["threshold_max_M"].get<int>();
  if (j.contains("run_thresholds")) cfg.run_thresholds = j["run_thresholds"].get<bool>();
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
  if (j.contains("discrepancy_order")) cfg.discrepancy_order = j["discrepancy_order"].get<int>();
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (experiment != "fig1" && experiment != "fig3" && experiment != "discrepancy" &&
      experiment != "custom")
    throw std::invalid_argument("config: unknown experiment '" + experiment + "'");
  if (orders.empty()) throw std::invalid_argument("config: orders must be nonempty");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw std::invalid_argument("config: orders must be positive");
    if (i > 0 && orders[i] <= orders[i - 1])
      throw std::invalid_argument("config: orders must be strictly ascending");
  }
  for (int n : modes)
    if (n == 0) throw std::invalid_argument("config: modes must be nonzero");
  if (experiment != "discrepancy" && modes.empty())
    throw std::invalid_argument("config: modes must be nonempty");
  if (experiment == "fig1") concentric_of(geometry, "config fig1");
  if (experiment == "fig3") inclusion_of(geometry, "config fig3");
  if (experiment == "discrepancy") {
    concentric_of(geometry, "config discrepancy");
    if (widths.empty()) throw std::invalid_argument("config: discrepancy needs a widths sweep");
    if (discrepancy_order < 1) throw std::invalid_argument("config: discrepancy_order must be >= 1");
  }
  if (model == Model::kCem && std::holds_alternative<DiskInclusion>(geometry))
    throw std::invalid_argument("config: the CEM pipeline requires a concentric conductivity");
  if (!(threshold_target > 0.0)) throw std::invalid_argument("config: threshold_target must be positive");
}

}  // namespace eit::bench
