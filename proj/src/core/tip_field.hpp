// tip_field.hpp: field of a uniformly magnetized truncated-cone tip whose
// magnetized slab sits below a non-magnetic cap of thickness s.
//
// Coordinates: the tip apex plane (bottom of the cap) is z = 0 and the slab
// occupies z' in [-h - s, -s]. Field points have z > 0.

#pragma once

#include "core/error.hpp"

namespace skyrmech {

struct TipGeometry {
  double r_a = 40e-9;    // upper-surface radius (m), the one nearest the sample
  double r_b = 160e-9;   // lower-surface radius (m)
  double h_tip = 180e-9; // magnetized height (m)
  double s_nm = 10e-9;   // non-magnetized cap thickness (m)
  double mu0_ms = 2.4;   // T

  void validate() const;
};

struct FieldSample {
  double rho = 0.0;
  double z = 0.0;
  double bz = 0.0;
  double dbz_dz = 0.0;
};

/// R(z') = (r_a - r_b)/h (z' + s) + r_a. OutOfSlab outside [-h - s, -s].
double tip_radius_at(const TipGeometry& geom, double z_prime);

/// On-axis B_z (T).
double bz_on_axis(const TipGeometry& geom, double z);

/// dB_z/dz on the axis (T/m), from the differentiated integrand.
double gradient_on_axis(const TipGeometry& geom, double z);

/// B_z at cylindrical radius rho (m) and height z, via complete elliptic
/// integrals of the loop stack.
double bz_off_axis(const TipGeometry& geom, double rho, double z);

/// Field and gradient on the axis together.
FieldSample sample_on_axis(const TipGeometry& geom, double z);

/// Field of the sub-slab z' in [z_lo, z_hi] only (superposition checks).
double bz_on_axis_slab(const TipGeometry& geom, double z, double z_lo, double z_hi);

}  // namespace skyrmech
