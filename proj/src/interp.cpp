#include "eit/interp.hpp"

#include <cmath>
#include <stdexcept>

namespace eit {

NodeSet::NodeSet(int M) : M_(M) {
  if (M < 0) throw std::invalid_argument("NodeSet: negative order");
}

double NodeSet::angle(int m) const {
  if (m < -M_ || m > M_) throw std::out_of_range("NodeSet::angle: index outside [-M, M]");
  return kTwoPi * m / count();
}

std::vector<double> NodeSet::angles() const {
  std::vector<double> out;
  out.reserve(count());
  for (int m = -M_; m <= M_; ++m) out.push_back(angle(m));
  return out;
}

std::vector<Complex> NodeSet::sample(const TrigCoeffs& g) const {
  std::vector<Complex> out;
  out.reserve(count());
  for (int m = -M_; m <= M_; ++m) out.push_back(g(angle(m)));
  return out;
}

namespace {

int order_from_size(std::size_t size, const char* what) {
  if (size == 0 || size % 2 == 0)
    throw std::invalid_argument(std::string(what) + ": size must be 2M+1");
  return static_cast<int>((size - 1) / 2);
}

void check_zero_sum(const std::vector<Complex>& v, const char* what) {
  Complex s{};
  double sq = 0.0;
  for (const Complex& x : v) {
    s += x;
    sq += std::norm(x);
  }
  if (std::abs(s) > kZeroSumTol * std::sqrt(sq))
    throw std::invalid_argument(std::string(what) + ": component sum violates the zero-sum invariant");
}

}  // namespace

ElectrodeVector::ElectrodeVector(int M, Kind kind)
    : M_(M), kind_(kind), v_(2 * static_cast<std::size_t>(M) + 1, Complex{}) {
  if (M < 0) throw std::invalid_argument("ElectrodeVector: negative order");
}

ElectrodeVector ElectrodeVector::current(std::vector<Complex> values) {
  const int M = order_from_size(values.size(), "ElectrodeVector::current");
  check_zero_sum(values, "ElectrodeVector::current");
  return ElectrodeVector(M, Kind::kCurrent, std::move(values));
}

ElectrodeVector ElectrodeVector::voltage(std::vector<Complex> values) {
  const int M = order_from_size(values.size(), "ElectrodeVector::voltage");
  check_zero_sum(values, "ElectrodeVector::voltage");
  return ElectrodeVector(M, Kind::kVoltage, std::move(values));
}

ElectrodeVector ElectrodeVector::demeaned(std::vector<Complex> values, Kind kind) {
  const int M = order_from_size(values.size(), "ElectrodeVector::demeaned");
  Complex mean{};
  for (const Complex& x : values) mean += x;
  mean /= static_cast<double>(values.size());
  for (Complex& x : values) x -= mean;
  return ElectrodeVector(M, kind, std::move(values));
}

Complex ElectrodeVector::sum() const {
  Complex s{};
  for (const Complex& x : v_) s += x;
  return s;
}

double ElectrodeVector::norm() const {
  double sq = 0.0;
  for (const Complex& x : v_) sq += std::norm(x);
  return std::sqrt(sq);
}

double ElectrodeVector::norm_l1() const {
  double s = 0.0;
  for (const Complex& x : v_) s += std::abs(x);
  return s;
}

TrigCoeffs basis_phi(int m, int M) {
  if (M < 0) throw std::invalid_argument("basis_phi: negative order");
  if (m < -M || m > M) throw std::out_of_range("basis_phi: index outside [-M, M]");
  const double theta_m = kTwoPi * m / (2 * M + 1);
  TrigCoeffs g(M);
  for (int n = -M; n <= M; ++n)
    g.set_coeff(n, std::polar(1.0 / (2 * M + 1), -n * theta_m));
  return g;
}

TrigCoeffs interpolate(std::span<const Complex> samples) {
  const int M = order_from_size(samples.size(), "interpolate");
  const NodeSet nodes(M);
  TrigCoeffs g(M);
  for (int n = -M; n <= M; ++n) {
    Complex c{};
    for (int m = -M; m <= M; ++m)
      c += samples[static_cast<std::size_t>(M + m)] * std::polar(1.0, -n * nodes.angle(m));
    g.set_coeff(n, c / static_cast<double>(2 * M + 1));
  }
  return g;
}

TrigCoeffs interpolate(const TrigCoeffs& g, int M) {
  const std::vector<Complex> samples = NodeSet(M).sample(g);
  return interpolate(std::span<const Complex>(samples));
}

TrigCoeffs lift(const ElectrodeVector& v) {
  if (std::abs(v.sum()) > kZeroSumTol * std::max(v.norm(), 1e-300))
    throw std::invalid_argument("lift: electrode vector is not zero-sum");
  TrigCoeffs g = interpolate(std::span<const Complex>(v.raw()));
  // The lifted polynomial lives in T^M_diamond; clear the roundoff dust at n = 0.
  g.set_coeff(0, Complex{});
  return g;
}

ElectrodeVector node_restriction(const TrigCoeffs& g, int M,
                                 ElectrodeVector::Kind kind) {
  if (g.order() > M || !g.is_mean_free())
    throw std::invalid_argument("node_restriction: input is not in T^M_diamond");
  std::vector<Complex> samples = NodeSet(M).sample(g);
  return kind == ElectrodeVector::Kind::kCurrent
             ? ElectrodeVector::current(std::move(samples))
             : ElectrodeVector::voltage(std::move(samples));
}

Complex trapezoid_inner(const TrigCoeffs& f, const TrigCoeffs& g, int M) {
  const NodeSet nodes(M);
  Complex sum{};
  for (int m = -M; m <= M; ++m) {
    const double theta = nodes.angle(m);
    sum += f(theta) * std::conj(g(theta));
  }
  return nodes.spacing() * sum;
}

Complex node_average(const TrigCoeffs& g, int M) {
  const NodeSet nodes(M);
  Complex sum{};
  for (int m = -M; m <= M; ++m) sum += g(nodes.angle(m));
  return sum / static_cast<double>(nodes.count());
}

TrigCoeffs point_eval(const TrigCoeffs& g, int M, int out_order) {
  if (out_order < 0) throw std::invalid_argument("point_eval: negative output order");
  const NodeSet nodes(M);
  const std::vector<Complex> samples = nodes.sample(g);
  TrigCoeffs out(out_order);
  for (int n = -out_order; n <= out_order; ++n) {
    Complex c{};
    for (int m = -M; m <= M; ++m)
      c += samples[static_cast<std::size_t>(M + m)] * std::polar(1.0, -n * nodes.angle(m));
    out.set_coeff(n, c / static_cast<double>(nodes.count()));
  }
  return out;
}

TrigCoeffs recenter(const TrigCoeffs& g, int M) {
  TrigCoeffs out = g;
  out.set_coeff(0, g.coeff(0) - node_average(g, M));
  return out;
}

double interpolation_constant(double s, double tol) {
  if (s <= 0.5) throw std::invalid_argument("interpolation_constant: series diverges for s <= 1/2");
  if (tol <= 0.0) throw std::invalid_argument("interpolation_constant: tolerance must be positive");
  // Tail bound: sum_{n > K} n^{-2s} <= int_K^inf x^{-2s} dx = K^{1-2s}/(2s-1).
  auto tail = [s](double K) { return std::pow(K, 1.0 - 2.0 * s) / (2.0 * s - 1.0); };
  long long K = 16;
  while (tail(static_cast<double>(K)) >= tol) K *= 2;
  double sum = 0.0;
  for (long long n = K; n >= 1; --n) sum += std::exp(-2.0 * s * std::log(static_cast<double>(n)));
  sum += 1.0;  // the n = 0 term, with the max{1, n} weight
  return std::sqrt(sum);
}

}  // namespace eit
