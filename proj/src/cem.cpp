#include "eit/cem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eit {

CemLayout CemLayout::equiangular(int M, double width, Complex z) {
  CemLayout layout{M, NodeSet(M).angles(), width,
                   std::vector<Complex>(2 * static_cast<std::size_t>(std::max(M, 0)) + 1, z)};
  layout.validate();
  return layout;
}

CemLayout CemLayout::with_midpoints(std::vector<double> midpoints, double width,
                                    std::vector<Complex> impedance) {
  if (midpoints.empty() || midpoints.size() % 2 == 0)
    throw std::invalid_argument("CemLayout: electrode count must be 2M+1");
  CemLayout layout{static_cast<int>((midpoints.size() - 1) / 2), std::move(midpoints), width,
                   std::move(impedance)};
  layout.validate();
  return layout;
}

void CemLayout::validate() const {
  const std::size_t count = 2 * static_cast<std::size_t>(M) + 1;
  if (M < 0 || midpoints.size() != count || impedance.size() != count)
    throw std::invalid_argument("CemLayout: inconsistent electrode count");
  if (!(width > 0.0)) throw std::invalid_argument("CemLayout: width must be positive");
  for (const Complex& z : impedance)
    if (!(z.real() > 0.0))
      throw std::invalid_argument("CemLayout: contact impedances need positive real part");
  // Disjointness: consecutive midpoints (circularly) must be more than one
  // width apart.
  std::vector<double> sorted = midpoints;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t m = 0; m < count; ++m) {
    const double gap = m + 1 < count ? sorted[m + 1] - sorted[m]
                                     : sorted.front() + kTwoPi - sorted.back();
    if (!(gap > width)) throw std::invalid_argument("CemLayout: electrodes overlap");
  }
}

double dtn_coefficient(int n, const ConcentricConductivity& c) {
  if (n == 0) return 0.0;
  const double x = c.contrast() * std::pow(c.radius, 2.0 * std::abs(n));
  return std::abs(n) * (1.0 - x) / (1.0 + x);
}

Complex electrode_integral(int n, double midpoint, double width) {
  if (n == 0) return Complex{width, 0.0};
  return std::polar(2.0 * std::sin(n * width / 2.0) / n, n * midpoint);
}

CemSolver::CemSolver(CemLayout layout, ConcentricConductivity conductivity, int truncation)
    : layout_(std::move(layout)), cond_(conductivity) {
  layout_.validate();
  const int M = layout_.M;
  if (truncation <= 0) {
    N_ = std::max(8 * M, 256);
  } else if (truncation < 4 * M) {
    throw std::invalid_argument("CemSolver: truncation below the 4M minimum");
  } else {
    N_ = truncation;
  }

  const int N = N_;
  const int K = 2 * M + 1;
  const int dim = (2 * N + 1) + K + 1;

  // Electrode sums share the Toeplitz structure sum_m z_m^{-1} A_m(p)
  // = w(p) T(p) with w(p) = 2 sin(p width/2)/p and T(p) = sum_m z_m^{-1} e^{i p mid_m}.
  std::vector<double> w(4 * static_cast<std::size_t>(N) + 1);
  std::vector<Complex> T(4 * static_cast<std::size_t>(N) + 1);
  for (int p = -2 * N; p <= 2 * N; ++p) {
    w[static_cast<std::size_t>(2 * N + p)] =
        p == 0 ? layout_.width : 2.0 * std::sin(p * layout_.width / 2.0) / p;
    Complex t{};
    for (int m = 0; m < K; ++m)
      t += std::polar(1.0, p * layout_.midpoints[static_cast<std::size_t>(m)]) /
           layout_.impedance[static_cast<std::size_t>(m)];
    T[static_cast<std::size_t>(2 * N + p)] = t;
  }

  matrix_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = -N; k <= N; ++k) {
    const int row = N + k;
    matrix_(row, row) = kTwoPi * dtn_coefficient(k, cond_);
    for (int n = -N; n <= N; ++n)
      matrix_(row, N + n) += w[static_cast<std::size_t>(2 * N + n - k)] *
                             T[static_cast<std::size_t>(2 * N + n - k)];
    for (int m = 0; m < K; ++m)
      matrix_(row, 2 * N + 1 + m) =
          -electrode_integral(-k, layout_.midpoints[static_cast<std::size_t>(m)], layout_.width) /
          layout_.impedance[static_cast<std::size_t>(m)];
  }
  for (int m = 0; m < K; ++m) {
    const int row = 2 * N + 1 + m;
    const Complex zinv = 1.0 / layout_.impedance[static_cast<std::size_t>(m)];
    for (int n = -N; n <= N; ++n)
      matrix_(row, N + n) =
          -zinv * electrode_integral(n, layout_.midpoints[static_cast<std::size_t>(m)], layout_.width);
    matrix_(row, row) = zinv * layout_.width;
    matrix_(row, dim - 1) = 1.0;  // Lagrange multiplier for the grounding row
    matrix_(dim - 1, row) = 1.0;
  }

  lu_.compute(matrix_);
}

CemSolution CemSolver::solve(const ElectrodeVector& current) const {
  if (current.order() != layout_.M)
    throw std::invalid_argument("CemSolver::solve: current pattern has the wrong electrode count");
  const int N = N_;
  const int K = 2 * layout_.M + 1;
  const int dim = (2 * N + 1) + K + 1;

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
  for (int m = 0; m < K; ++m) rhs(2 * N + 1 + m) = current.raw()[static_cast<std::size_t>(m)];

  const Eigen::VectorXcd x = lu_.solve(rhs);
  const double residual = (matrix_ * x - rhs).norm();
  if (!(residual <= 1e-8 * (rhs.norm() + x.norm())))
    throw std::runtime_error("CemSolver::solve: Galerkin system is numerically singular");

  TrigCoeffs trace(N);
  for (int n = -N; n <= N; ++n) trace.set_coeff(n, x(N + n));
  std::vector<Complex> U(static_cast<std::size_t>(K));
  for (int m = 0; m < K; ++m) U[static_cast<std::size_t>(m)] = x(2 * N + 1 + m);
  return CemSolution{std::move(trace),
                     ElectrodeVector::demeaned(std::move(U), ElectrodeVector::Kind::kVoltage), N};
}

CemSolution solve_cem(const ElectrodeVector& current, const CemLayout& layout,
                      const ConcentricConductivity& c, int truncation) {
  return CemSolver(layout, c, truncation).solve(current);
}

RelativeCem::RelativeCem(const CemLayout& layout, const ConcentricConductivity& c, int truncation)
    : sigma_(layout, c, truncation),
      reference_(layout, ConcentricConductivity(1.0, c.radius), truncation) {}

ElectrodeVector RelativeCem::apply(const ElectrodeVector& current) const {
  const ElectrodeVector with_inclusion = sigma_.solve(current).voltages;
  const ElectrodeVector reference = reference_.solve(current).voltages;
  std::vector<Complex> diff(with_inclusion.raw());
  for (std::size_t m = 0; m < diff.size(); ++m) diff[m] -= reference.raw()[m];
  return ElectrodeVector::demeaned(std::move(diff), ElectrodeVector::Kind::kVoltage);
}

ElectrodeVector upsilon_cem(const ElectrodeVector& current, const CemLayout& layout,
                            const ConcentricConductivity& c, int truncation) {
  return RelativeCem(layout, c, truncation).apply(current);
}

TrigCoeffs hat_upsilon_m(const TrigCoeffs& f, int M, double width, Complex z,
                         const ConcentricConductivity& c, const MobiusMap& phi, int truncation) {
  const NodeSet nodes(M);
  std::vector<double> midpoints(static_cast<std::size_t>(nodes.count()));
  std::vector<Complex> samples(static_cast<std::size_t>(nodes.count()));
  if (phi.is_identity()) {
    for (int m = -M; m <= M; ++m) {
      midpoints[static_cast<std::size_t>(M + m)] = nodes.angle(m);
      samples[static_cast<std::size_t>(M + m)] = f(nodes.angle(m));
    }
  } else {
    const MobiusMap psi = phi.inverse();
    for (int m = -M; m <= M; ++m) {
      const double y = psi.boundary_angle(nodes.angle(m));
      midpoints[static_cast<std::size_t>(M + m)] = y;
      samples[static_cast<std::size_t>(M + m)] = psi.boundary_derivative(nodes.angle(m)) * f(y);
    }
  }
  const CemLayout layout = CemLayout::with_midpoints(
      std::move(midpoints), width,
      std::vector<Complex>(static_cast<std::size_t>(nodes.count()), z));
  const ElectrodeVector I = mimic_current(std::span<const Complex>(samples));
  const ElectrodeVector U = upsilon_cem(I, layout, c, truncation);
  return compose_boundary(lift(U), phi);
}

double err_rel_cem(int n, int M, double width, Complex z, const ConcentricConductivity& c,
                   int truncation) {
  return err_rel_cem(std::vector<int>{n}, M, width, z, c, truncation).front();
}

std::vector<double> err_rel_cem(const std::vector<int>& modes, int M, double width, Complex z,
                                const ConcentricConductivity& c, int truncation) {
  const CemLayout layout = CemLayout::equiangular(M, width, z);
  const RelativeCem relative(layout, c, truncation);
  std::vector<double> errs;
  errs.reserve(modes.size());
  for (int n : modes) {
    const double lambda = relative_eigenvalue(n, c);
    if (lambda == 0.0)
      throw std::invalid_argument("err_rel_cem: relative map vanishes (kappa = 1)");
    const ElectrodeVector I = mimic_current(TrigCoeffs::monomial(n), M);
    const TrigCoeffs approx = lift(relative.apply(I));
    errs.push_back(relative_l2_error(TrigCoeffs::monomial(n, lambda), approx));
  }
  return errs;
}

double discrepancy_opnorm(int M, double width, const ConcentricConductivity& c, Complex z,
                          int truncation) {
  const CemLayout layout = CemLayout::equiangular(M, width, z);
  const RelativeCem relative(layout, c, truncation);
  const NodeSet nodes(M);
  const int K = nodes.count();

  Eigen::MatrixXcd diff(K, K - 1);
  int col = 0;
  for (int k = -M; k <= M; ++k) {
    if (k == 0) continue;
    std::vector<Complex> v(static_cast<std::size_t>(K));
    for (int m = -M; m <= M; ++m)
      v[static_cast<std::size_t>(M + m)] = std::polar(1.0 / std::sqrt(K), k * nodes.angle(m));
    const ElectrodeVector I = ElectrodeVector::demeaned(std::move(v), ElectrodeVector::Kind::kCurrent);
    const ElectrodeVector cem = relative.apply(I);
    const ElectrodeVector pem = pem_measure(I, c);
    for (int m = 0; m < K; ++m)
      diff(m, col) = cem.raw()[static_cast<std::size_t>(m)] - pem.raw()[static_cast<std::size_t>(m)];
    ++col;
  }
  return diff.jacobiSvd().singularValues()(0);
}

}  // namespace eit
