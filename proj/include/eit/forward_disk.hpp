#pragma once

#include <span>

#include "eit/interp.hpp"
#include "eit/trig_coeffs.hpp"

namespace eit {

/// Radially symmetric conductivity on the unit disk: value kappa inside the
/// origin-centered disk of the given radius, unit background outside.
struct ConcentricConductivity {
  double kappa;
  double radius;

  ConcentricConductivity(double kappa, double radius);

  /// Contrast mu = (1 - kappa)/(1 + kappa) in (-1, 1).
  double contrast() const { return (1.0 - kappa) / (1.0 + kappa); }
};

/// Eigenvalue lambda_n of the relative ND map on f_n:
/// (2/|n|) mu R^{2|n|} / (1 - mu R^{2|n|}).  Rejects n = 0.
double relative_eigenvalue(int n, const ConcentricConductivity& c);

/// Relative ND map: coefficient-wise multiplication by lambda_n.  The input
/// must be mean-free (tolerated up to roundoff dust, which is cleared).
TrigCoeffs apply_relative_nd(const TrigCoeffs& f, const ConcentricConductivity& c);

/// Relative threshold of the series tail rule below.
inline constexpr double kTruncationTol = 1e-16;

/// Smallest N with |lambda_N| * sum|I_m| / (2 pi) < 1e-16 * |I|; the geometric
/// decay of lambda_n makes the bound certifiable.
int auto_truncation(const ConcentricConductivity& c, const ElectrodeVector& I);

/// Relative PEM measurement with point electrodes at the given boundary
/// angles: builds f_I from Dirac coefficients, applies the diagonal relative
/// map truncated at N (N <= 0 selects auto_truncation), evaluates at the same
/// angles, and demeans.  Throws if an explicit N fails the tail estimate.
ElectrodeVector pem_measure_at(const ElectrodeVector& I, std::span<const double> angles,
                               const ConcentricConductivity& c, int truncation = 0);

/// Same with the equiangular electrodes x_m of the interpolation grid.
ElectrodeVector pem_measure(const ElectrodeVector& I, const ConcentricConductivity& c,
                            int truncation = 0);

/// Electrode current pattern mimicking the continuum current with the given
/// weighted boundary samples: I_m = (2 pi/(2M+1)) (s_m - mean(s)).
ElectrodeVector mimic_current(std::span<const Complex> weighted_samples);
/// Unit-weight equiangular samples of f.
ElectrodeVector mimic_current(const TrigCoeffs& f, int M);

/// Three-step electrode route: mimic_current -> pem_measure -> lift.
/// Output lies in T^M_diamond.
TrigCoeffs mimic_pipeline(const TrigCoeffs& f, int M, const ConcentricConductivity& c,
                          int truncation = 0);

/// The same map as the operator composition P_diamond Q_M Upsilon F_M G_M.
TrigCoeffs mimic_operator(const TrigCoeffs& f, int M, const ConcentricConductivity& c,
                          int truncation = 0);

/// Relative L^2 error of the PEM pipeline on the Fourier mode f_n against the
/// exact relative measurement lambda_n f_n.  Rejects kappa = 1 (zero map).
double err_rel_pem(int n, int M, const ConcentricConductivity& c);

}  // namespace eit
