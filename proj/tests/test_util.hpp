#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "eit/trig_coeffs.hpp"

namespace eit::test {

/// Term-by-term synthesis, independent of TrigCoeffs::operator().
inline Complex naive_eval(const TrigCoeffs& g, double theta) {
  Complex sum{};
  for (int n = -g.order(); n <= g.order(); ++n)
    sum += g.coeff(n) * std::polar(1.0, n * theta);
  return sum;
}

/// Random trigonometric polynomial with coefficients uniform in the unit box.
inline TrigCoeffs random_poly(std::mt19937& rng, int order, bool mean_free = false) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  TrigCoeffs g(order);
  for (int n = -order; n <= order; ++n) g.set_coeff(n, Complex{uni(rng), uni(rng)});
  return mean_free ? g.mean_free() : g;
}

/// Fourier coefficients of e^{cos theta} truncated at the given order,
/// computed by a dense trapezoid rule on exp(cos) directly (spectrally exact
/// for this entire function).
inline TrigCoeffs exp_cos_coeffs(int order = 40) {
  const int K = 1024;
  TrigCoeffs g(order);
  for (int n = -order; n <= order; ++n) {
    Complex c{};
    for (int j = 0; j < K; ++j) {
      const double theta = kTwoPi * j / K;
      c += std::exp(std::cos(theta)) * std::polar(1.0, -n * theta);
    }
    g.set_coeff(n, c / static_cast<double>(K));
  }
  return g;
}

/// Two-point log-log slope.
inline double slope2(double x0, double y0, double x1, double y1) {
  return std::log(y1 / y0) / std::log(x1 / x0);
}

/// Composite 5-point Gauss-Legendre quadrature of f over [a, b].
template <typename F>
double gauss_quad(const F& f, double a, double b, int panels = 64) {
  static const double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                  0.5384693101056831, 0.9061798459386640};
  static const double weights[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                    0.4786286704993665, 0.2369268850561891};
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int q = 0; q < 5; ++q) sum += weights[q] * f(mid + 0.5 * h * nodes[q]);
  }
  return 0.5 * h * sum;
}

template <typename F>
Complex gauss_quad_complex(const F& f, double a, double b, int panels = 64) {
  const double re = gauss_quad([&](double t) { return f(t).real(); }, a, b, panels);
  const double im = gauss_quad([&](double t) { return f(t).imag(); }, a, b, panels);
  return Complex{re, im};
}

}  // namespace eit::test
