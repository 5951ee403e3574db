#pragma once

#include <Eigen/Dense>

#include "eit/conformal.hpp"
#include "eit/forward_disk.hpp"
#include "eit/interp.hpp"

namespace eit {

/// Electrode geometry and contact impedances on the unit circle: 2M+1
/// electrodes of common arclength `width` centered at `midpoints`, with
/// contact impedances of positive real part.
struct CemLayout {
  int M;
  std::vector<double> midpoints;   // ascending angles, size 2M+1
  double width;
  std::vector<Complex> impedance;  // z_m, Re z_m > 0, size 2M+1

  /// Midpoints on the equiangular grid theta_m, equal impedance z.
  static CemLayout equiangular(int M, double width, Complex z);
  /// Arbitrary midpoints (e.g. conformal images of the equiangular grid).
  static CemLayout with_midpoints(std::vector<double> midpoints, double width,
                                  std::vector<Complex> impedance);

  /// Checks electrode count, width positivity, non-overlap and Re z > 0.
  void validate() const;
};

/// DtN coefficient of the concentric conductivity on e^{i n theta}:
/// d_n = |n| (1 - mu R^{2|n|})/(1 + mu R^{2|n|}), d_0 = 0.
double dtn_coefficient(int n, const ConcentricConductivity& c);

/// Moment int_{E} e^{i n theta} dtheta over the arc of the given midpoint and
/// width: e^{i n mid} 2 sin(n width/2)/n, or the width for n = 0.
Complex electrode_integral(int n, double midpoint, double width);

struct CemSolution {
  TrigCoeffs trace;           // Dirichlet trace of u on the unit circle
  ElectrodeVector voltages;   // U, zero mean
  int truncation;             // Galerkin order N
};

/// Boundary-spectral Galerkin solver for the complete electrode model on the
/// unit disk.  The trial space is spanned by the conductivity-harmonic lifts
/// of e^{i n theta}, |n| <= N, which makes the stiffness block the diagonal
/// 2 pi d_n; the electrode coupling is assembled from closed-form moments and
/// the grounding constraint sum U_m = 0 enters through a Lagrange multiplier.
/// The dense factorization is computed once and reused across current
/// patterns; instances are immutable after construction.
class CemSolver {
 public:
  /// truncation <= 0 selects the default max(8M, 256); explicit values below
  /// 4M are rejected.
  CemSolver(CemLayout layout, ConcentricConductivity conductivity, int truncation = 0);

  CemSolution solve(const ElectrodeVector& current) const;

  int truncation() const { return N_; }
  const CemLayout& layout() const { return layout_; }

 private:
  CemLayout layout_;
  ConcentricConductivity cond_;
  int N_;
  Eigen::MatrixXcd matrix_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

CemSolution solve_cem(const ElectrodeVector& current, const CemLayout& layout,
                      const ConcentricConductivity& c, int truncation = 0);

/// Relative measurement map Upsilon_CEM = R(sigma) - R(1); both solves share
/// the layout and truncation, the reference one using the unit conductivity.
class RelativeCem {
 public:
  RelativeCem(const CemLayout& layout, const ConcentricConductivity& c, int truncation = 0);
  ElectrodeVector apply(const ElectrodeVector& current) const;
  const CemSolver& perturbed() const { return sigma_; }
  const CemSolver& reference() const { return reference_; }

 private:
  CemSolver sigma_;
  CemSolver reference_;
};

ElectrodeVector upsilon_cem(const ElectrodeVector& current, const CemLayout& layout,
                            const ConcentricConductivity& c, int truncation = 0);

/// CEM-based mimicking operator: the Upsilon_M pipeline with the relative CEM
/// measurement in place of the PEM one.  Electrode midpoints are the images of
/// the equiangular grid under phi^{-1} (the grid itself for the identity).
TrigCoeffs hat_upsilon_m(const TrigCoeffs& f, int M, double width, Complex z,
                         const ConcentricConductivity& c, const MobiusMap& phi = {},
                         int truncation = 0);

/// Relative L^2 error of the CEM pipeline on f_n against lambda_n f_n.
double err_rel_cem(int n, int M, double width, Complex z, const ConcentricConductivity& c,
                   int truncation = 0);

/// Batched variant sharing one pair of factorizations across the modes.
std::vector<double> err_rel_cem(const std::vector<int>& modes, int M, double width, Complex z,
                                const ConcentricConductivity& c, int truncation = 0);

/// Largest singular value of Upsilon_CEM - Upsilon_PEM on the mean-free
/// subspace, assembled on the orthonormal discrete Fourier basis of
/// C_diamond^{2M+1} with equiangular electrodes.
double discrepancy_opnorm(int M, double width, const ConcentricConductivity& c, Complex z,
                          int truncation = 0);

}  // namespace eit
