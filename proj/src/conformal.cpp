#include "eit/conformal.hpp"

#include <limits>
#include <cmath>
#include <stdexcept>

namespace eit {

MobiusMap::MobiusMap(Complex a, Complex rot) : a_(a), rot_(rot) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("MobiusMap: |a| must be < 1");
  if (std::abs(std::abs(rot) - 1.0) > 1e-14)
    throw std::invalid_argument("MobiusMap: rotation factor must be unimodular");
}

Complex MobiusMap::operator()(Complex w) const {
  return rot_ * (w - a_) / (1.0 - std::conj(a_) * w);
}

Complex MobiusMap::derivative(Complex w) const {
  const Complex denom = 1.0 - std::conj(a_) * w;
  return rot_ * (1.0 - std::norm(a_)) / (denom * denom);
}

MobiusMap MobiusMap::inverse() const {
  // From z = rot (w - a)/(1 - conj(a) w):  w = conj(rot) (z + rot a)/(1 + conj(a) conj(rot)... )
  // which is again a family member with zero -a rot and factor conj(rot).
  return MobiusMap(-a_ * rot_, std::conj(rot_));
}

double MobiusMap::boundary_angle(double theta) const {
  return std::arg((*this)(std::polar(1.0, theta)));
}

double MobiusMap::boundary_derivative(double theta) const {
  const Complex w = std::polar(1.0, theta);
  return (1.0 - std::norm(a_)) / std::norm(1.0 - std::conj(a_) * w);
}

DiskInclusion::DiskInclusion(Complex center, double radius, double kappa)
    : center(center), radius(radius), kappa(kappa) {
  if (!(radius > 0.0)) throw std::invalid_argument("DiskInclusion: radius must be positive");
  if (!(std::abs(center) + radius < 1.0))
    throw std::invalid_argument("DiskInclusion: inclusion must lie strictly inside the unit disk");
  if (!(kappa > 0.0)) throw std::invalid_argument("DiskInclusion: kappa must be positive");
}

Concentrization concentrize(const DiskInclusion& inc) {
  const double r = std::abs(inc.center);
  if (r == 0.0)
    return {MobiusMap{}, ConcentricConductivity(inc.kappa, inc.radius)};

  const double rho = inc.radius;
  const double beta = (1.0 + r * r - rho * rho) / r;  // > 2 strictly inside
  // Roots multiply to 1; the stable form picks the one in (0, 1).
  const double a = 2.0 / (beta + std::sqrt(beta * beta - 4.0));
  const double R = (r + rho - a) / (1.0 - a * (r + rho));

  const double alpha = std::arg(inc.center);
  // Rotate the center onto the positive real axis, then map through
  // (w - a)/(1 - a w); in family form the zero is a e^{i alpha}.
  const MobiusMap xi(std::polar(a, alpha), std::polar(1.0, -alpha));
  return {xi, ConcentricConductivity(inc.kappa, R)};
}

namespace {

// Compensated accumulator; the transport coefficients get compared against
// tails around 1e-14 of the peak, which plain summation noise would mask.
struct KahanSum {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Trapezoid-sampled Fourier coefficients of a smooth periodic function given
// by a sampler; doubles the grid until the top quarter of the spectrum is
// below tail_tol relative to the largest coefficient.
template <typename Sampler>
TrigCoeffs sampled_coeffs(const Sampler& h, int start_nodes, double tail_tol, const char* what) {
  int K = std::max(start_nodes, 32);
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Complex> samples(K);
    for (int j = 0; j < K; ++j) samples[j] = h(kTwoPi * j / K);

    const int N = (K - 1) / 2;
    TrigCoeffs out(N);
    for (int n = -N; n <= N; ++n) {
      KahanSum re, im;
      for (int j = 0; j < K; ++j) {
        const Complex term = samples[j] * std::polar(1.0, -n * (kTwoPi * j / K));
        re.add(term.real());
        im.add(term.imag());
      }
      out.set_coeff(n, Complex{re.sum, im.sum} / static_cast<double>(K));
    }

    double head = 0.0, tail = 0.0, mean_abs = 0.0;
    for (const Complex& s : samples) mean_abs += std::abs(s);
    mean_abs /= K;
    for (int n = -N; n <= N; ++n) {
      const double mag = std::abs(out.coeff(n));
      head = std::max(head, mag);
      if (std::abs(n) > (3 * N) / 4) tail = std::max(tail, mag);
    }
    // The term-rounding noise of the sums does not shrink with K; once the
    // tail sits at that floor the spectrum is as resolved as it can get.
    const double noise_floor = 64.0 * std::numeric_limits<double>::epsilon() * mean_abs;
    if (tail <= std::max(tail_tol * head, noise_floor) || head == 0.0) return out;
    K *= 2;
  }
  throw std::runtime_error(std::string(what) + ": coefficient tail did not resolve");
}

TrigCoeffs rotation_twist(const TrigCoeffs& g, double alpha) {
  TrigCoeffs out(g.order());
  for (int n = -g.order(); n <= g.order(); ++n)
    out.set_coeff(n, g.coeff(n) * std::polar(1.0, n * alpha));
  return out;
}

}  // namespace

TrigCoeffs push_current(const TrigCoeffs& f, const MobiusMap& map, double tail_tol) {
  if (std::abs(f.coeff(0)) > 1e-13 * std::max(f.max_abs(), 1e-300))
    throw std::invalid_argument("push_current: input current is not mean-free");

  if (map.is_rotation()) {
    TrigCoeffs out = rotation_twist(f, std::arg(map.rotation_factor()));
    out.set_coeff(0, Complex{});
    return out;
  }

  auto h = [&](double phi) { return map.boundary_derivative(phi) * f(map.boundary_angle(phi)); };
  TrigCoeffs out = sampled_coeffs(h, 8 * (f.order() + 16), tail_tol, "push_current");

  // Change of variables preserves the vanishing mean; anything else indicates
  // an unresolved sampling grid.
  if (std::abs(out.coeff(0)) > 1e-12 * std::max(out.max_abs(), 1e-300))
    throw std::runtime_error("push_current: transported current lost its zero mean");
  out.set_coeff(0, Complex{});
  return out;
}

TrigCoeffs compose_boundary(const TrigCoeffs& g, const MobiusMap& map, double tail_tol) {
  if (map.is_rotation()) {
    TrigCoeffs out = rotation_twist(g, std::arg(map.rotation_factor()));
    out.set_coeff(0, Complex{});
    return out;
  }
  auto h = [&](double theta) { return g(map.boundary_angle(theta)); };
  TrigCoeffs out = sampled_coeffs(h, 8 * (g.order() + 16), tail_tol, "compose_boundary");
  return out.mean_free();
}

ElectrodeVector pem_measure_with_map(const ElectrodeVector& I, std::span<const double> angles,
                                     const MobiusMap& xi, const ConcentricConductivity& c,
                                     int truncation) {
  if (angles.size() != static_cast<std::size_t>(I.count()))
    throw std::invalid_argument("pem_measure_with_map: one electrode angle per current component");
  if (xi.is_identity()) return pem_measure_at(I, angles, c, truncation);
  // Dirac currents transport without a derivative weight: only the electrode
  // positions move.
  std::vector<double> mapped(angles.size());
  for (std::size_t m = 0; m < angles.size(); ++m) mapped[m] = xi.boundary_angle(angles[m]);
  return pem_measure_at(I, mapped, c, truncation);
}

ElectrodeVector pem_measure_general(const ElectrodeVector& I, std::span<const double> angles,
                                    const DiskInclusion& inc, int truncation) {
  const Concentrization conc = concentrize(inc);
  return pem_measure_with_map(I, angles, conc.map, conc.conductivity, truncation);
}

TrigCoeffs relative_cm(const TrigCoeffs& f, const DiskInclusion& inc) {
  const Concentrization conc = concentrize(inc);
  const TrigCoeffs transported = push_current(f, conc.map.inverse());
  const TrigCoeffs potential = apply_relative_nd(transported, conc.conductivity);
  return compose_boundary(potential, conc.map);
}

namespace {

template <typename Measure>
TrigCoeffs mimic_general(const TrigCoeffs& f, int M, const MobiusMap& phi, const Measure& measure) {
  const NodeSet nodes(M);
  std::vector<double> positions(nodes.count());
  std::vector<Complex> samples(nodes.count());
  if (phi.is_identity()) {
    for (int m = -M; m <= M; ++m) {
      positions[static_cast<std::size_t>(M + m)] = nodes.angle(m);
      samples[static_cast<std::size_t>(M + m)] = f(nodes.angle(m));
    }
  } else {
    const MobiusMap psi = phi.inverse();
    for (int m = -M; m <= M; ++m) {
      const double y = psi.boundary_angle(nodes.angle(m));
      positions[static_cast<std::size_t>(M + m)] = y;
      samples[static_cast<std::size_t>(M + m)] = psi.boundary_derivative(nodes.angle(m)) * f(y);
    }
  }
  const ElectrodeVector I = mimic_current(std::span<const Complex>(samples));
  const ElectrodeVector U = measure(I, std::span<const double>(positions));
  return compose_boundary(lift(U), phi);
}

}  // namespace

TrigCoeffs upsilon_m_general(const TrigCoeffs& f, int M, const MobiusMap& phi,
                             const DiskInclusion& inc, int truncation) {
  const Concentrization conc = concentrize(inc);
  return mimic_general(f, M, phi, [&](const ElectrodeVector& I, std::span<const double> pos) {
    return pem_measure_with_map(I, pos, conc.map, conc.conductivity, truncation);
  });
}

TrigCoeffs upsilon_m_general(const TrigCoeffs& f, int M, const MobiusMap& phi,
                             const ConcentricConductivity& c, int truncation) {
  return mimic_general(f, M, phi, [&](const ElectrodeVector& I, std::span<const double> pos) {
    return pem_measure_at(I, pos, c, truncation);
  });
}

double err_rel_pem(int n, int M, const DiskInclusion& inc) {
  if (n == 0) throw std::invalid_argument("err_rel_pem: n = 0 is outside the spectrum");
  if (inc.kappa == 1.0)
    throw std::invalid_argument("err_rel_pem: relative map vanishes (kappa = 1)");
  const TrigCoeffs f = TrigCoeffs::monomial(n);
  const TrigCoeffs exact = relative_cm(f, inc);
  const TrigCoeffs approx = upsilon_m_general(f, M, MobiusMap{}, inc);
  return relative_l2_error(exact, approx);
}

}  // namespace eit
