#include "eit/trig_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eit {

TrigCoeffs::TrigCoeffs(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TrigCoeffs: negative order");
  c_.assign(2 * static_cast<std::size_t>(order) + 1, Complex{});
}

TrigCoeffs::TrigCoeffs(int order, std::vector<Complex> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("TrigCoeffs: negative order");
  if (c_.size() != 2 * static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("TrigCoeffs: coefficient count != 2*order+1");
}

TrigCoeffs TrigCoeffs::monomial(int n, Complex amplitude) {
  TrigCoeffs g(std::abs(n));
  g.set_coeff(n, amplitude);
  return g;
}

void TrigCoeffs::set_coeff(int n, Complex value) {
  if (n < -order_ || n > order_)
    throw std::out_of_range("TrigCoeffs::set_coeff: index outside support");
  c_[order_ + n] = value;
}

Complex TrigCoeffs::operator()(double theta) const {
  // Horner-style synthesis in z = e^{i theta}: sum_{n=-N}^{N} c_n z^n.
  const Complex z = std::polar(1.0, theta);
  Complex pos{};  // sum c_n z^{n - 1} for n >= 1, built from the top
  Complex neg{};  // sum c_{-n} z^{-(n - 1)} analogously
  for (int n = order_; n >= 1; --n) {
    pos = pos * z + c_[order_ + n];
    neg = neg * std::conj(z) + c_[order_ - n];
  }
  return c_[order_] + pos * z + neg * std::conj(z);
}

TrigCoeffs TrigCoeffs::truncated(int M) const {
  if (M < 0) throw std::invalid_argument("truncated: negative order");
  if (M >= order_) return *this;  // support already inside [-M, M]
  TrigCoeffs out(M);
  for (int n = -M; n <= M; ++n) out.c_[M + n] = c_[order_ + n];
  return out;
}

TrigCoeffs TrigCoeffs::mean_free() const {
  TrigCoeffs out = *this;
  out.c_[order_] = Complex{};
  return out;
}

TrigCoeffs TrigCoeffs::trimmed(double threshold) const {
  int n = order_;
  while (n > 0 && std::abs(c_[order_ + n]) <= threshold &&
         std::abs(c_[order_ - n]) <= threshold)
    --n;
  return truncated(n);
}

double TrigCoeffs::max_abs() const {
  double m = 0.0;
  for (const Complex& v : c_) m = std::max(m, std::abs(v));
  return m;
}

TrigCoeffs& TrigCoeffs::operator+=(const TrigCoeffs& rhs) {
  if (rhs.order_ > order_) {
    TrigCoeffs grown(rhs.order_);
    for (int n = -order_; n <= order_; ++n) grown.c_[grown.order_ + n] = coeff(n);
    *this = std::move(grown);
  }
  for (int n = -rhs.order_; n <= rhs.order_; ++n) c_[order_ + n] += rhs.c_[rhs.order_ + n];
  return *this;
}

TrigCoeffs& TrigCoeffs::operator-=(const TrigCoeffs& rhs) {
  *this += Complex{-1.0, 0.0} * rhs;
  return *this;
}

TrigCoeffs& TrigCoeffs::operator*=(Complex scale) {
  for (Complex& v : c_) v *= scale;
  return *this;
}

TrigCoeffs operator+(const TrigCoeffs& a, const TrigCoeffs& b) {
  TrigCoeffs out = a;
  out += b;
  return out;
}

TrigCoeffs operator-(const TrigCoeffs& a, const TrigCoeffs& b) {
  TrigCoeffs out = a;
  out -= b;
  return out;
}

TrigCoeffs operator*(Complex scale, TrigCoeffs g) {
  g *= scale;
  return g;
}

TrigCoeffs delta_coeffs(double theta0, int order) {
  if (order < 0) throw std::invalid_argument("delta_coeffs: negative order");
  TrigCoeffs g(order);
  for (int n = -order; n <= order; ++n)
    g.set_coeff(n, std::polar(1.0 / kTwoPi, -n * theta0));
  return g;
}

double sobolev_weight(int n, double s) {
  if (n == 0 || n == 1 || n == -1 || s == 0.0) return 1.0;
  return std::exp(2.0 * s * std::log(static_cast<double>(std::abs(n))));
}

double sobolev_norm(const TrigCoeffs& g, double s) {
  double sum = 0.0;
  for (int n = -g.order(); n <= g.order(); ++n) sum += sobolev_weight(n, s) * std::norm(g.coeff(n));
  return std::sqrt(kTwoPi * sum);
}

Complex sobolev_inner(const TrigCoeffs& f, const TrigCoeffs& g, double s) {
  const int N = std::min(f.order(), g.order());
  Complex sum{};
  for (int n = -N; n <= N; ++n) sum += sobolev_weight(n, s) * f.coeff(n) * std::conj(g.coeff(n));
  return kTwoPi * sum;
}

Complex dual_pairing(const TrigCoeffs& f, const TrigCoeffs& g) {
  return sobolev_inner(f, g, 0.0);
}

double relative_l2_error(const TrigCoeffs& exact, const TrigCoeffs& approx) {
  const double denom = sobolev_norm(exact, 0.0);
  if (denom == 0.0) throw std::invalid_argument("relative_l2_error: zero reference");
  return sobolev_norm(exact - approx, 0.0) / denom;
}

}  // namespace eit
