#pragma once

#include <complex>
#include <vector>

namespace eit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A trigonometric polynomial (or truncated periodic distribution) stored as
/// its centered Fourier coefficients g^(n), |n| <= order().  Index 0 sits at
/// the center of a dense complex array; no FFT ordering is exposed.
///
/// Values are immutable in spirit: every operation returns a new object, and
/// the few mutators exist only for construction-time filling.
class TrigCoeffs {
 public:
  /// The zero function of the given truncation order.
  explicit TrigCoeffs(int order = 0);
  /// Coefficients in ascending index order, size 2*order+1.
  TrigCoeffs(int order, std::vector<Complex> coeffs);

  /// f_n = e^{i n theta}, optionally scaled.
  static TrigCoeffs monomial(int n, Complex amplitude = Complex{1.0, 0.0});

  int order() const { return order_; }
  int count() const { return 2 * order_ + 1; }

  /// Coefficient at index n; zero outside the stored support.
  Complex coeff(int n) const {
    return (n < -order_ || n > order_) ? Complex{} : c_[order_ + n];
  }
  void set_coeff(int n, Complex value);

  /// Pointwise synthesis sum g^(n) e^{i n theta}; exact for trig polynomials.
  Complex operator()(double theta) const;

  /// Orthogonal projection P_M: truncates the support to |n| <= M.
  TrigCoeffs truncated(int M) const;
  /// Orthogonal projection onto the mean-free subspace: zeroes the n = 0 slot.
  TrigCoeffs mean_free() const;
  bool is_mean_free() const { return c_[order_] == Complex{}; }

  /// Drops trailing coefficients with |c_n| <= threshold (both tails).
  TrigCoeffs trimmed(double threshold = 0.0) const;

  /// Largest coefficient magnitude.
  double max_abs() const;

  /// Coefficients in ascending index order, -order .. order.
  const std::vector<Complex>& raw() const { return c_; }

  TrigCoeffs& operator+=(const TrigCoeffs& rhs);
  TrigCoeffs& operator-=(const TrigCoeffs& rhs);
  TrigCoeffs& operator*=(Complex scale);

  friend bool operator==(const TrigCoeffs& a, const TrigCoeffs& b) = default;

 private:
  int order_;
  std::vector<Complex> c_;  // c_[order_ + n] holds the coefficient at n
};

TrigCoeffs operator+(const TrigCoeffs& a, const TrigCoeffs& b);
TrigCoeffs operator-(const TrigCoeffs& a, const TrigCoeffs& b);
TrigCoeffs operator*(Complex scale, TrigCoeffs g);

/// Coefficients of the 2*pi-periodic Dirac delta at theta0, truncated at
/// |n| <= order: e^{-i n theta0} / (2 pi).
TrigCoeffs delta_coeffs(double theta0, int order);

/// Sobolev weight max{1, |n|}^{2s}.
double sobolev_weight(int n, double s);

/// H^s norm (2 pi sum max{1,|n|}^{2s} |g^(n)|^2)^{1/2} over the support.
double sobolev_norm(const TrigCoeffs& g, double s);

/// H^s inner product 2 pi sum max{1,|n|}^{2s} f^(n) conj(g^(n)).
Complex sobolev_inner(const TrigCoeffs& f, const TrigCoeffs& g, double s);

/// Sesquilinear dual pairing 2 pi sum f^(n) conj(g^(n)) (no weights); extends
/// the L^2 inner product to distribution/test-function pairs with finite
/// common support.
Complex dual_pairing(const TrigCoeffs& f, const TrigCoeffs& g);

/// ||exact - approx||_{L^2} / ||exact||_{L^2}.
double relative_l2_error(const TrigCoeffs& exact, const TrigCoeffs& approx);

}  // namespace eit
