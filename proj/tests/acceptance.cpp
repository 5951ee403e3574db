// Acceptance suite: runs the headline convergence experiments and the
// supporting property checks at their pinned tolerances and prints one
// pass/fail line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "eit/bench.hpp"
#include "test_util.hpp"

using namespace eit;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& text) {
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, text.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criteria 1 and 2: Example 1 slopes and electrode-count thresholds ----

void criterion_fig1_slopes_and_thresholds() {
  const auto t0 = std::chrono::steady_clock::now();
  const ConcentricConductivity c(0.5, 0.9);
  const Complex z{1.0, 0.0};
  const std::vector<int> modes{1, 2, 4, 8};
  const std::vector<int> orders{16, 22, 32, 45, 64};

  bench::ExperimentConfig cfg = bench::ExperimentConfig::preset("fig1");
  cfg.orders = orders;
  cfg.run_thresholds = false;
  cfg.jobs = 0;
  const bench::RunResult result = bench::run_fig1(cfg);

  for (const auto& [label, target] :
       {std::pair{std::string("fig1-elec1"), -2.0}, std::pair{std::string("fig1-elec2"), -4.0}}) {
    for (const int n : modes) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& r : result.records)
        if (r.experiment == label && r.mode == n) pts.emplace_back(r.M, r.err);
      const double slope = bench::fit_loglog_slope(pts);
      const auto& [x0, y0] = pts[pts.size() - 2];
      const auto& [x1, y1] = pts.back();
      const double tail = std::log(y1 / y0) / std::log(x1 / x0);
      report(1, std::abs(slope - target) <= 0.3,
             label + " n=" + std::to_string(n) + " slope over M in [16,64]: " +
                 fmt("%.3f", slope) + " (target " + fmt("%.1f", target) + " +/- 0.3; tail segment " +
                 fmt("%.2f", tail) + ")");
    }
  }
  std::printf("       fig1 slope sweep: %.1f s\n", seconds_since(t0));

  const auto t1 = std::chrono::steady_clock::now();
  const int count1 = bench::threshold_electrode_count(bench::WidthLaw::kHalfCoverage, c, z, modes,
                                                      0.01, 64, 0);
  const int count2 = bench::threshold_electrode_count(bench::WidthLaw::kInverseMSquared, c, z,
                                                      modes, 0.01, 64, 0);
  report(2, std::abs(count1 - 80) <= 0.2 * 80,
         "electrodes for all err < 0.01, half-coverage law: " + std::to_string(count1) +
             " (target 80 +/- 20%)");
  report(2, std::abs(count2 - 33) <= 0.2 * 33,
         "electrodes for all err < 0.01, 1/M^2 law: " + std::to_string(count2) +
             " (target 33 +/- 20%)");
  std::printf("       threshold search: %.1f s\n", seconds_since(t1));
}

// ---- criteria 3 and 4: Example 2 accuracy and superalgebraic shape ----

void criterion_fig3() {
  const auto t0 = std::chrono::steady_clock::now();
  const DiskInclusion inc(Complex{-0.4, 0.2}, 0.4, 0.5);
  const std::vector<int> modes{1, 2, 4, 8};
  const std::vector<int> orders{4, 8, 16, 32, 64};

  for (const int n : modes) {
    const TrigCoeffs f = TrigCoeffs::monomial(n);
    const TrigCoeffs exact = relative_cm(f, inc);
    std::vector<double> errs;
    for (const int M : orders)
      errs.push_back(relative_l2_error(exact, upsilon_m_general(f, M, MobiusMap{}, inc)));

    report(3, errs.back() < 1e-12,
           "fig3 n=" + std::to_string(n) + " err at M=64: " + fmt("%.3e", errs.back()) +
               " (target < 1e-12)");

    bool decreasing = true;
    double prev = 0.0;
    std::string slopes;
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
      const double slope = std::log(errs[i + 1] / errs[i]) /
                           std::log(static_cast<double>(orders[i + 1]) / orders[i]);
      if (i > 0 && !(slope < prev)) decreasing = false;
      prev = slope;
      slopes += (i ? ", " : "") + fmt("%.1f", slope);
    }
    report(4, decreasing,
           "fig3 n=" + std::to_string(n) + " successive slopes strictly decreasing: " + slopes);
  }
  std::printf("       fig3 sweep: %.1f s\n", seconds_since(t0));
}

// ---- criterion 5: CEM-PEM discrepancy scaling ----

void criterion_discrepancy() {
  const ConcentricConductivity c(0.5, 0.5);
  const std::vector<double> widths{0.2, 0.1, 0.05, 0.025};
  std::vector<std::pair<double, double>> pts;
  for (const double d : widths)
    pts.emplace_back(d, discrepancy_opnorm(4, d, c, Complex{1.0, 0.0}));
  const double slope = bench::fit_loglog_slope(pts);
  report(5, std::abs(slope - 2.0) <= 0.2,
         "operator-norm discrepancy vs d at M=4: slope " + fmt("%.3f", slope) +
             " (target 2.0 +/- 0.2)");
}

// ---- criterion 6: property suite ----

void criterion_properties() {
  std::mt19937 rng(2026);
  bool quad_ok = true;
  for (int M = 1; M <= 32; ++M) {
    const TrigCoeffs f = test::random_poly(rng, M);
    const TrigCoeffs g = test::random_poly(rng, M);
    quad_ok = quad_ok && std::abs(trapezoid_inner(f, g, M) - sobolev_inner(f, g, 0.0)) < 1e-12;
  }
  report(6, quad_ok, "trapezoid rule exact on T^M for M <= 32 (tol 1e-12)");

  bool proj_ok = true;
  for (int M = 1; M <= 32; ++M) {
    const TrigCoeffs g = test::random_poly(rng, M);
    proj_ok = proj_ok && sobolev_norm(interpolate(g, M) - g, 0.0) < 1e-12 * sobolev_norm(g, 0.0);
  }
  report(6, proj_ok, "Q_M reproduces T^M for M <= 32 (tol 1e-12)");

  bool ortho_ok = true;
  for (int M = 1; M <= 32; ++M)
    for (const auto& [s, t] : {std::pair{2.0, 0.0}, std::pair{1.0, 1.0}, std::pair{3.0, -1.0}}) {
      const TrigCoeffs f = TrigCoeffs::monomial(M + 1);
      const double ratio = sobolev_norm(f - f.truncated(M), t) / sobolev_norm(f, s);
      ortho_ok = ortho_ok &&
                 std::abs(ratio - std::pow(1.0 + M, t - s)) <= 1e-12 * std::pow(1.0 + M, t - s);
    }
  report(6, ortho_ok, "projection norm equality attained at f_{M+1} (rel tol 1e-12)");

  bool lift_ok = true;
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (const int M : {1, 2, 5, 9, 16}) {
    std::vector<Complex> v(2 * static_cast<std::size_t>(M) + 1);
    for (Complex& x : v) x = Complex{uni(rng), uni(rng)};
    const ElectrodeVector I = ElectrodeVector::demeaned(std::move(v),
                                                        ElectrodeVector::Kind::kCurrent);
    const double lhs = std::pow(sobolev_norm(lift(I), 0.0), 2);
    const double rhs = kTwoPi / (2 * M + 1) * std::pow(I.norm(), 2);
    lift_ok = lift_ok && std::abs(lhs - rhs) <= 1e-13 * rhs;
  }
  report(6, lift_ok, "hat{Q}_M norm identity (tol 1e-13)");

  const ConcentricConductivity c(0.5, 0.9);
  bool sym_ok = true;
  for (int M = 1; M <= 16; ++M) {
    const TrigCoeffs v = test::random_poly(rng, M, true);
    const TrigCoeffs w = test::random_poly(rng, M, true);
    const Complex lhs = sobolev_inner(v, mimic_pipeline(w, M, c), 0.0);
    const int N = auto_truncation(c, mimic_current(w, M));
    const Complex rhs =
        dual_pairing(point_eval(v, M, N), apply_relative_nd(point_eval(w, M, N), c));
    sym_ok = sym_ok && std::abs(lhs - rhs) < 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
  }
  report(6, sym_ok, "symmetry <v, P Q_M Upsilon F_M G_M w> = <F_M v, Upsilon F_M w> (tol 1e-12)");

  bool dtn_ok = true;
  for (int n = 1; n <= 8; ++n)
    dtn_ok = dtn_ok && std::abs(1.0 / dtn_coefficient(n, c) - 1.0 / n -
                                relative_eigenvalue(n, c)) < 1e-14;
  report(6, dtn_ok, "DtN/eigenvalue identity 1/d_n - 1/n = lambda_n (tol 1e-14)");

  const DiskInclusion inc(Complex{-0.4, 0.2}, 0.4, 0.5);
  const Concentrization conc = concentrize(inc);
  bool mobius_ok = true;
  for (int k = 0; k < 256; ++k) {
    const Complex p = inc.center + std::polar(inc.radius, kTwoPi * k / 256.0);
    mobius_ok = mobius_ok &&
                std::abs(std::abs(conc.map(p)) - conc.conductivity.radius) < 1e-10;
  }
  report(6, mobius_ok, "Mobius concentricity oracle (tol 1e-10)");

  const TrigCoeffs smooth = test::exp_cos_coeffs(40);
  const double cs1 = interpolation_constant(1.0, 1e-8);
  const double cs2 = interpolation_constant(2.0, 1e-10);
  bool bound_ok = true;
  for (int M = 2; M <= 64; ++M) {
    const double err = sobolev_norm(smooth - interpolate(smooth, M), 0.0);
    bound_ok = bound_ok && err < cs2 * std::pow(0.5 + M, -2.0) * sobolev_norm(smooth, 2.0);
  }
  const double lemma1 = 2.0 * cs1 + cs1 * cs1;
  const double lemma2 = (1.0 + std::sqrt(2.0) * cs1) * lemma1;
  for (int M = 1; M <= 32; ++M) {
    const TrigCoeffs f = test::random_poly(rng, 2 * M);
    const TrigCoeffs g = test::random_poly(rng, 2 * M);
    bound_ok = bound_ok &&
               std::abs(dual_pairing(point_eval(f, M, 2 * M) - f, g)) <
                   lemma1 * std::pow(0.5 + M, -1.0) * sobolev_norm(f, 1.0) * sobolev_norm(g, 1.0);
    const TrigCoeffs fd = f.mean_free();
    const TrigCoeffs gd = g.mean_free();
    bound_ok = bound_ok &&
               std::abs(dual_pairing(point_eval(recenter(fd, M), M, 2 * M) - fd, gd)) <
                   lemma2 * std::pow(0.5 + M, -1.0) * sobolev_norm(fd, 1.0) * sobolev_norm(gd, 1.0);
    const TrigCoeffs sm = smooth.mean_free();
    bound_ok = bound_ok &&
               std::abs(dual_pairing(point_eval(recenter(sm, M), M, sm.order()) - sm, sm)) <
                   lemma2 * std::pow(0.5 + M, -1.0) * std::pow(sobolev_norm(sm, 1.0), 2);
  }
  report(6, bound_ok,
         "interpolation bound on exp(cos) and Lemma 4.1/4.2 bounds, strict at every M");
}

// ---- criterion 7: route equivalence ----

void criterion_route_equivalence() {
  std::mt19937 rng(4096);
  const ConcentricConductivity c(0.5, 0.9);
  bool ok = true;
  double worst = 0.0;
  for (const int M : {2, 5, 9, 16})
    for (int trial = 0; trial < 50; ++trial) {
      const TrigCoeffs f = test::random_poly(rng, M + 3, true);
      const TrigCoeffs a = mimic_pipeline(f, M, c);
      const TrigCoeffs b = mimic_operator(f, M, c);
      const double rel = sobolev_norm(a - b, 0.0) / std::max(sobolev_norm(a, 0.0), 1e-30);
      worst = std::max(worst, rel);
      ok = ok && rel < 1e-12;
    }
  report(7, ok, "electrode route vs operator composition, 50 inputs x M in {2,5,9,16}: worst " +
                    fmt("%.2e", worst) + " (tol 1e-12)");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_fig1_slopes_and_thresholds();
  criterion_fig3();
  criterion_discrepancy();
  criterion_properties();
  criterion_route_equivalence();
  std::printf("acceptance total: %.1f s, %d failure(s)\n", seconds_since(t0), g_failures);
  return g_failures == 0 ? 0 : 1;
}
