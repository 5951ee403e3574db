#pragma once

#include <span>
#include <vector>

#include "eit/trig_coeffs.hpp"

namespace eit {

/// Equidistant interpolation grid theta_m = 2 pi m / (2M+1), m in [-M, M].
/// On the unit circle the nodes are x_m = e^{i theta_m}.
class NodeSet {
 public:
  explicit NodeSet(int M);

  int order() const { return M_; }
  int count() const { return 2 * M_ + 1; }
  double spacing() const { return kTwoPi / count(); }
  double angle(int m) const;   // m in [-M, M]
  Complex point(int m) const { return std::polar(1.0, angle(m)); }

  std::vector<double> angles() const;
  /// g evaluated at all nodes, ascending m.
  std::vector<Complex> sample(const TrigCoeffs& g) const;

 private:
  int M_;
};

/// Net electrode currents or relative electrode potentials, indexed -M..M.
/// Construction enforces the gauge invariant: the component sum vanishes
/// within 1e-13 relative (zero sum for currents, zero mean for voltages).
class ElectrodeVector {
 public:
  enum class Kind { kCurrent, kVoltage };

  ElectrodeVector(int M, Kind kind);  // zeros
  /// Validates the zero-sum invariant; throws std::invalid_argument on violation.
  static ElectrodeVector current(std::vector<Complex> values);
  static ElectrodeVector voltage(std::vector<Complex> values);
  /// Convenience: subtracts the mean so the invariant holds exactly.
  static ElectrodeVector demeaned(std::vector<Complex> values, Kind kind);

  int order() const { return M_; }
  int count() const { return 2 * M_ + 1; }
  Kind kind() const { return kind_; }
  Complex operator[](int m) const { return v_[M_ + m]; }
  const std::vector<Complex>& raw() const { return v_; }

  Complex sum() const;
  double norm() const;      // Euclidean
  double norm_l1() const;

  friend bool operator==(const ElectrodeVector& a, const ElectrodeVector& b) = default;

 private:
  ElectrodeVector(int M, Kind kind, std::vector<Complex> values)
      : M_(M), kind_(kind), v_(std::move(values)) {}

  int M_;
  Kind kind_;
  std::vector<Complex> v_;
};

/// Zero-sum tolerance used by the ElectrodeVector invariant (relative).
inline constexpr double kZeroSumTol = 1e-13;

/// Interpolation basis function phi_m: coefficients e^{-i n theta_m}/(2M+1),
/// |n| <= M.  phi_m(theta_j) = delta_{jm}.
TrigCoeffs basis_phi(int m, int M);

/// Trigonometric interpolation Q_M from samples at the 2M+1 nodes (ascending m).
TrigCoeffs interpolate(std::span<const Complex> samples);
/// Q_M g: samples g at the nodes and interpolates.
TrigCoeffs interpolate(const TrigCoeffs& g, int M);

/// hat{Q}_M: lifts a zero-sum electrode vector to sum I_m phi_m, the matching
/// mean-free trigonometric polynomial.  The n = 0 slot is zeroed exactly.
TrigCoeffs lift(const ElectrodeVector& v);

/// Inverse of hat{Q}_M: node samples of g in T^M_diamond as an electrode
/// vector of the requested kind.  Requires order(g) <= M and zero mean.
ElectrodeVector node_restriction(const TrigCoeffs& g, int M,
                                 ElectrodeVector::Kind kind);

/// Periodic trapezoidal rule value (2 pi/(2M+1)) sum f(theta_m) conj(g(theta_m));
/// equals the L^2 inner product exactly when f, g lie in T^M.
Complex trapezoid_inner(const TrigCoeffs& f, const TrigCoeffs& g, int M);

/// Node average (1/(2M+1)) sum g(theta_m).
Complex node_average(const TrigCoeffs& g, int M);

/// F_M g: coefficients of (2 pi/(2M+1)) sum g(theta_m) delta_{theta_m},
/// truncated at |n| <= out_order (the delta combination has infinite spectrum,
/// so the caller picks the representation order).
TrigCoeffs point_eval(const TrigCoeffs& g, int M, int out_order);

/// G_M g = g - node average; makes F_M G_M output mean-free.
TrigCoeffs recenter(const TrigCoeffs& g, int M);

/// C_s = (sum_{n>=0} max{1,n}^{-2s})^{1/2} = (1 + zeta(2s))^{1/2}, s > 1/2,
/// computed to absolute accuracy tol by partial sums with an integral tail
/// bound (the summation cutoff doubles until the tail drops below tol).
double interpolation_constant(double s, double tol = 1e-10);

}  // namespace eit
