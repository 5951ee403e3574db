#pragma once

#include <span>

#include "eit/forward_disk.hpp"
#include "eit/trig_coeffs.hpp"

namespace eit {

/// Disk automorphism w -> rot (w - a)/(1 - conj(a) w) with |a| < 1 and
/// |rot| = 1; maps the open unit disk onto itself and the unit circle onto
/// itself.  The family is closed under inversion and composition with
/// rotations, which is all the boundary machinery here needs.
class MobiusMap {
 public:
  MobiusMap() : a_{}, rot_{1.0, 0.0} {}  // identity
  MobiusMap(Complex a, Complex rot);
  static MobiusMap rotation(double alpha) { return MobiusMap(Complex{}, std::polar(1.0, alpha)); }

  Complex operator()(Complex w) const;
  /// Complex derivative rot (1 - |a|^2)/(1 - conj(a) w)^2.
  Complex derivative(Complex w) const;
  /// Closed-form inverse, again a member of the family.
  MobiusMap inverse() const;
  /// Post-rotation of the image: w -> e^{i alpha} map(w).
  MobiusMap rotated(double alpha) const { return MobiusMap(a_, std::polar(1.0, alpha) * rot_); }

  /// Angle of the image of e^{i theta}, in (-pi, pi].
  double boundary_angle(double theta) const;
  /// |derivative| on the boundary; also d/dtheta of the boundary angle map.
  double boundary_derivative(double theta) const;

  Complex zero() const { return a_; }
  Complex rotation_factor() const { return rot_; }
  bool is_rotation() const { return a_ == Complex{}; }
  bool is_identity() const { return is_rotation() && rot_ == Complex{1.0, 0.0}; }

 private:
  Complex a_;
  Complex rot_;
};

/// Discoidal inclusion of conductivity kappa centered at c with radius rho,
/// strictly inside the unit disk: |c| + rho < 1.
struct DiskInclusion {
  Complex center;
  double radius;
  double kappa;

  DiskInclusion(Complex center, double radius, double kappa);
};

/// A Mobius transformation sending the inclusion circle onto an origin-centered
/// circle, together with the resulting radially symmetric conductivity.
struct Concentrization {
  MobiusMap map;  // Xi
  ConcentricConductivity conductivity;
};

/// Concentrizes the inclusion: rotates its center onto the positive real axis,
/// then solves a^2 - a (1 + r^2 - rho^2)/r + 1 = 0 for the root in (0, r+rho)
/// and maps through (w - a)/(1 - a w).  The image radius R is uniquely
/// determined by |c| and rho; the rotation gauge is fixed by the construction.
Concentrization concentrize(const DiskInclusion& inc);

/// Fourier coefficients of |map'| (f o map) on the boundary (current-density
/// transport).  f must be mean-free; the result's mean is verified to vanish
/// within 1e-12 relative and then zeroed exactly.  Sampling starts at
/// 8 (order(f) + 16) nodes and doubles until the coefficient tail is resolved.
TrigCoeffs push_current(const TrigCoeffs& f, const MobiusMap& map, double tail_tol = 1e-14);

/// Fourier coefficients of g o map, demeaned (potential transport; the ground
/// level is refixed after composition).
TrigCoeffs compose_boundary(const TrigCoeffs& g, const MobiusMap& map, double tail_tol = 1e-14);

/// Relative PEM measurement for point electrodes at the given boundary angles
/// of the nonconcentric geometry: transports the Dirac currents through the
/// given concentrizing map (no derivative weight on deltas), applies the
/// diagonal relative map, evaluates at the mapped angles, and demeans.
ElectrodeVector pem_measure_with_map(const ElectrodeVector& I, std::span<const double> angles,
                                     const MobiusMap& xi, const ConcentricConductivity& c,
                                     int truncation = 0);

/// Same with the canonical concentrization of the inclusion.
ElectrodeVector pem_measure_general(const ElectrodeVector& I, std::span<const double> angles,
                                    const DiskInclusion& inc, int truncation = 0);

/// Exact relative continuum measurement for the nonconcentric inclusion:
/// push the current to the concentric frame, apply the diagonal map, compose
/// the potential back.
TrigCoeffs relative_cm(const TrigCoeffs& f, const DiskInclusion& inc);

/// Upsilon_M for a Mobius-parametrized domain: electrode current weighted by
/// |Psi'(x_m)|, PEM measurement at the mapped electrode positions,
/// trigonometric interpolation on the reference circle, and pullback through
/// phi with the mean refixed.  phi = identity reduces to mimic_pipeline.
TrigCoeffs upsilon_m_general(const TrigCoeffs& f, int M, const MobiusMap& phi,
                             const DiskInclusion& inc, int truncation = 0);
TrigCoeffs upsilon_m_general(const TrigCoeffs& f, int M, const MobiusMap& phi,
                             const ConcentricConductivity& c, int truncation = 0);

/// Relative L^2 error of the PEM pipeline on f_n for the nonconcentric
/// geometry with equiangular point electrodes.
double err_rel_pem(int n, int M, const DiskInclusion& inc);

}  // namespace eit
