#include "eit/forward_disk.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using namespace eit;

namespace {

const ConcentricConductivity kReference(0.5, 0.9);

TrigCoeffs random_mean_free(std::mt19937& rng, int order) {
  return test::random_poly(rng, order, true);
}

}  // namespace

TEST_CASE("relative eigenvalues") {
  SUBCASE("no contrast, no response") {
    const ConcentricConductivity plain(1.0, 0.7);
    for (const int n : {1, -3, 9}) CHECK(relative_eigenvalue(n, plain) == 0.0);
  }
  SUBCASE("kappa = 0.5, R = 0.9 reference values") {
    CHECK(relative_eigenvalue(1, kReference) == doctest::Approx(0.54 / 0.73).epsilon(1e-14));
    const double x8 = (1.0 / 3.0) * std::pow(0.9, 16.0);
    CHECK(relative_eigenvalue(8, kReference) ==
          doctest::Approx(0.25 * x8 / (1.0 - x8)).epsilon(1e-14));
    CHECK(relative_eigenvalue(-8, kReference) == relative_eigenvalue(8, kReference));
  }
  SUBCASE("geometric decay") {
    const double bound = 2.0 * kReference.contrast() /
                         (1.0 - kReference.contrast() * 0.81);
    for (int n = 1; n <= 16; ++n) {
      if (n > 1) CHECK(relative_eigenvalue(n, kReference) < relative_eigenvalue(n - 1, kReference));
      CHECK(relative_eigenvalue(n, kReference) <= bound * std::pow(0.9, 2.0 * n) * (1.0 + 1e-13));
    }
  }
  CHECK_THROWS_AS(relative_eigenvalue(0, kReference), std::invalid_argument);
  CHECK_THROWS_AS(ConcentricConductivity(-1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ConcentricConductivity(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("relative ND map") {
  std::mt19937 rng(17);
  SUBCASE("monomials are eigenfunctions") {
    for (const int n : {1, -2, 5}) {
      const TrigCoeffs out = apply_relative_nd(TrigCoeffs::monomial(n), kReference);
      CHECK(sobolev_norm(out - TrigCoeffs::monomial(n, relative_eigenvalue(n, kReference)), 0.0) <
            1e-15);
    }
  }
  SUBCASE("kappa = 1 gives the zero map") {
    const TrigCoeffs out = apply_relative_nd(random_mean_free(rng, 6),
                                             ConcentricConductivity(1.0, 0.5));
    CHECK(out.max_abs() == 0.0);
  }
  SUBCASE("rejects non-mean-free input") {
    CHECK_THROWS_AS(apply_relative_nd(TrigCoeffs::monomial(0, 1.0), kReference),
                    std::invalid_argument);
  }
}

TEST_CASE("PEM measurement") {
  std::mt19937 rng(19);
  SUBCASE("zero current, zero voltage") {
    const ElectrodeVector U = pem_measure(ElectrodeVector(4, ElectrodeVector::Kind::kCurrent),
                                          kReference);
    CHECK(U.norm() == 0.0);
  }
  SUBCASE("kappa = 1 measures nothing") {
    const ElectrodeVector I = mimic_current(random_mean_free(rng, 4), 4);
    CHECK(pem_measure(I, ConcentricConductivity(1.0, 0.5)).norm() < 1e-16);
  }
  SUBCASE("reciprocity: the demeaned matrix is complex-symmetric") {
    const int M = 5, K = 2 * M + 1;
    std::vector<std::vector<Complex>> matrix(K, std::vector<Complex>(K));
    for (int col = 0; col < K; ++col) {
      std::vector<Complex> e(K, Complex{});
      e[col] = 1.0;
      const ElectrodeVector I = ElectrodeVector::demeaned(e, ElectrodeVector::Kind::kCurrent);
      const ElectrodeVector U = pem_measure(I, kReference);
      for (int row = 0; row < K; ++row) matrix[row][col] = U.raw()[row];
    }
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < K; ++j) CHECK(std::abs(matrix[i][j] - matrix[j][i]) < 1e-12);
  }
  SUBCASE("explicit truncation below the tail rule is rejected") {
    const ElectrodeVector I = mimic_current(TrigCoeffs::monomial(1), 4);
    CHECK_THROWS_AS(pem_measure(I, kReference, 2), std::invalid_argument);
  }
}

TEST_CASE("mimicking pipeline") {
  std::mt19937 rng(53);
  SUBCASE("kappa = 1 gives zero output") {
    const TrigCoeffs g = mimic_pipeline(random_mean_free(rng, 5), 5,
                                        ConcentricConductivity(1.0, 0.5));
    CHECK(g.max_abs() == 0.0);
  }
  SUBCASE("electrode route equals the operator composition") {
    for (const int M : {2, 5, 9, 16}) {
      const TrigCoeffs f = random_mean_free(rng, M + 3);
      const TrigCoeffs via_electrodes = mimic_pipeline(f, M, kReference);
      const TrigCoeffs via_operators = mimic_operator(f, M, kReference);
      const double scale = std::max(sobolev_norm(via_electrodes, 0.0), 1e-30);
      CHECK(sobolev_norm(via_electrodes - via_operators, 0.0) < 1e-12 * scale);
    }
  }
  SUBCASE("output is exactly mean-free and lives in T^M") {
    const int M = 7;
    const TrigCoeffs g = mimic_pipeline(random_mean_free(rng, 12), M, kReference);
    CHECK(g.is_mean_free());
    CHECK(g.order() <= M);
  }
  SUBCASE("f_1 at M = 64 is mimicked to twelve digits") {
    const TrigCoeffs f = TrigCoeffs::monomial(1);
    const TrigCoeffs exact = TrigCoeffs::monomial(1, relative_eigenvalue(1, kReference));
    const TrigCoeffs g = mimic_pipeline(f, 64, kReference);
    CHECK(relative_l2_error(exact, g) < 1e-12);
  }
}

TEST_CASE("symmetry of the mimicked map") {
  std::mt19937 rng(59);
  for (int M = 1; M <= 16; ++M) {
    const TrigCoeffs v = random_mean_free(rng, M);
    const TrigCoeffs w = random_mean_free(rng, M);
    const Complex lhs = sobolev_inner(v, mimic_pipeline(w, M, kReference), 0.0);

    const int N = auto_truncation(kReference, mimic_current(w, M));
    const TrigCoeffs fv = point_eval(v, M, N);
    const TrigCoeffs upsilon_fw = apply_relative_nd(point_eval(w, M, N), kReference);
    const Complex rhs = dual_pairing(fv, upsilon_fw);

    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    CHECK(std::abs(lhs - rhs) < 1e-12 * scale);
  }
}

TEST_CASE("relative errors of the PEM pipeline") {
  SUBCASE("an exact approximation has zero error") {
    const TrigCoeffs x = TrigCoeffs::monomial(2, 0.3);
    CHECK(relative_l2_error(x, x) == 0.0);
  }
  SUBCASE("error decreases from M = 4 to M = 8 and obeys algebraic envelopes") {
    const double e4 = err_rel_pem(1, 4, kReference);
    const double e8 = err_rel_pem(1, 8, kReference);
    CHECK(e8 < e4);
    const std::vector<int> orders{4, 8, 16, 32};
    std::vector<double> errs;
    for (int M : orders) errs.push_back(err_rel_pem(1, M, kReference));
    for (const double s : {1.0, 2.0, 3.0})
      for (std::size_t i = 1; i < orders.size(); ++i) {
        const double prev = errs[i - 1] * std::pow(0.5 + orders[i - 1], s);
        const double curr = errs[i] * std::pow(0.5 + orders[i], s);
        CHECK(curr < 1.5 * prev);  // decays at least like (1/2+M)^{-s}
      }
  }
  SUBCASE("superalgebraic decay: log-log slopes keep steepening") {
    std::vector<int> orders{4, 8, 16, 32};
    double prev_slope = 0.0;
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
      const double slope = test::slope2(orders[i], err_rel_pem(2, orders[i], kReference),
                                        orders[i + 1], err_rel_pem(2, orders[i + 1], kReference));
      if (i > 0) CHECK(slope < prev_slope);
      prev_slope = slope;
    }
  }
  SUBCASE("kappa = 1 is rejected") {
    CHECK_THROWS_AS(err_rel_pem(1, 4, ConcentricConductivity(1.0, 0.5)), std::invalid_argument);
  }
}

TEST_CASE("Neumann data of the pipeline error envelope") {
  // For the demeaned exp(cos) input the L2 pipeline error must decay at least
  // as fast as (1/2+M)^{-2}.
  const TrigCoeffs f = test::exp_cos_coeffs(40).mean_free();
  const TrigCoeffs exact = apply_relative_nd(f, kReference);
  std::vector<std::pair<double, double>> points;
  for (const int M : {4, 8, 16, 32, 64}) {
    const double err = sobolev_norm(exact - mimic_pipeline(f, M, kReference), 0.0);
    if (err > 0.0) points.emplace_back(0.5 + M, err);
  }
  REQUIRE(points.size() >= 3);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double slope = test::slope2(points[i].first, points[i].second, points[i + 1].first,
                                      points[i + 1].second);
    CHECK(slope <= -2.0);
  }
}
