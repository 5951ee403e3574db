#include "eit/forward_disk.hpp"

#include <cmath>
#include <stdexcept>

namespace eit {

ConcentricConductivity::ConcentricConductivity(double kappa, double radius)
    : kappa(kappa), radius(radius) {
  if (!(kappa > 0.0)) throw std::invalid_argument("ConcentricConductivity: kappa must be positive");
  if (!(radius > 0.0 && radius < 1.0))
    throw std::invalid_argument("ConcentricConductivity: radius must lie in (0, 1)");
}

double relative_eigenvalue(int n, const ConcentricConductivity& c) {
  if (n == 0) throw std::invalid_argument("relative_eigenvalue: n = 0 is outside the spectrum");
  const double x = c.contrast() * std::pow(c.radius, 2.0 * std::abs(n));
  return (2.0 / std::abs(n)) * x / (1.0 - x);
}

namespace {

// Mean-free precondition: exact zero or roundoff dust, which gets cleared.
TrigCoeffs require_mean_free(const TrigCoeffs& f, const char* what) {
  if (std::abs(f.coeff(0)) > 1e-13 * std::max(f.max_abs(), 1e-300))
    throw std::invalid_argument(std::string(what) + ": input is not mean-free");
  return f.mean_free();
}

}  // namespace

TrigCoeffs apply_relative_nd(const TrigCoeffs& f, const ConcentricConductivity& c) {
  const TrigCoeffs g = require_mean_free(f, "apply_relative_nd");
  TrigCoeffs out(g.order());
  for (int n = -g.order(); n <= g.order(); ++n) {
    if (n == 0) continue;
    out.set_coeff(n, relative_eigenvalue(n, c) * g.coeff(n));
  }
  return out;
}

int auto_truncation(const ConcentricConductivity& c, const ElectrodeVector& I) {
  const double scale = kTruncationTol * I.norm();
  const double l1 = I.norm_l1() / kTwoPi;
  int N = 1;
  while (std::abs(relative_eigenvalue(N, c)) * l1 >= scale) {
    if (++N > 5'000'000)
      throw std::runtime_error("auto_truncation: eigenvalue decay too slow (radius too close to 1)");
  }
  return N;
}

ElectrodeVector pem_measure_at(const ElectrodeVector& I, std::span<const double> angles,
                               const ConcentricConductivity& c, int truncation) {
  if (I.kind() != ElectrodeVector::Kind::kCurrent)
    throw std::invalid_argument("pem_measure_at: current pattern expected");
  if (angles.size() != static_cast<std::size_t>(I.count()))
    throw std::invalid_argument("pem_measure_at: one electrode angle per current component");
  if (I.norm() == 0.0) return ElectrodeVector(I.order(), ElectrodeVector::Kind::kVoltage);

  int N = truncation;
  if (N <= 0) {
    N = auto_truncation(c, I);
  } else if (std::abs(relative_eigenvalue(N, c)) * I.norm_l1() / kTwoPi >=
             kTruncationTol * I.norm()) {
    throw std::invalid_argument("pem_measure_at: truncation too small for the series tail");
  }

  // Fourier coefficients of f_I = sum I_m delta_{angle_m}, then the diagonal
  // relative map; modes above N are below the tail threshold.
  const int K = I.count();
  std::vector<Complex> weighted(2 * static_cast<std::size_t>(N) + 1, Complex{});
  for (int n = -N; n <= N; ++n) {
    if (n == 0) continue;
    Complex fi{};
    for (int m = 0; m < K; ++m) fi += I.raw()[m] * std::polar(1.0, -n * angles[m]);
    weighted[static_cast<std::size_t>(N + n)] = relative_eigenvalue(n, c) * fi / kTwoPi;
  }

  std::vector<Complex> potentials(K, Complex{});
  for (int m = 0; m < K; ++m) {
    Complex u{};
    for (int n = -N; n <= N; ++n)
      u += weighted[static_cast<std::size_t>(N + n)] * std::polar(1.0, n * angles[m]);
    potentials[m] = u;
  }
  return ElectrodeVector::demeaned(std::move(potentials), ElectrodeVector::Kind::kVoltage);
}

ElectrodeVector pem_measure(const ElectrodeVector& I, const ConcentricConductivity& c,
                            int truncation) {
  const std::vector<double> angles = NodeSet(I.order()).angles();
  return pem_measure_at(I, angles, c, truncation);
}

ElectrodeVector mimic_current(std::span<const Complex> weighted_samples) {
  std::vector<Complex> v(weighted_samples.begin(), weighted_samples.end());
  const double scale = kTwoPi / static_cast<double>(v.size());
  for (Complex& x : v) x *= scale;
  return ElectrodeVector::demeaned(std::move(v), ElectrodeVector::Kind::kCurrent);
}

ElectrodeVector mimic_current(const TrigCoeffs& f, int M) {
  const std::vector<Complex> samples = NodeSet(M).sample(f);
  return mimic_current(std::span<const Complex>(samples));
}

TrigCoeffs mimic_pipeline(const TrigCoeffs& f, int M, const ConcentricConductivity& c,
                          int truncation) {
  const ElectrodeVector I = mimic_current(f, M);
  const ElectrodeVector U = pem_measure(I, c, truncation);
  return lift(U);
}

TrigCoeffs mimic_operator(const TrigCoeffs& f, int M, const ConcentricConductivity& c,
                          int truncation) {
  const TrigCoeffs g = recenter(f, M);
  int N = truncation;
  if (N <= 0) N = auto_truncation(c, mimic_current(f, M));
  const TrigCoeffs deltas = point_eval(g, M, N);
  const TrigCoeffs v = apply_relative_nd(deltas, c);
  return interpolate(v, M).mean_free();
}

double err_rel_pem(int n, int M, const ConcentricConductivity& c) {
  const double lambda = relative_eigenvalue(n, c);
  if (lambda == 0.0)
    throw std::invalid_argument("err_rel_pem: relative map vanishes (kappa = 1)");
  const TrigCoeffs exact = TrigCoeffs::monomial(n, lambda);
  const TrigCoeffs approx = mimic_pipeline(TrigCoeffs::monomial(n), M, c);
  return relative_l2_error(exact, approx);
}

}  // namespace eit
