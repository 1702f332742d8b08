#include "core/tip_field.hpp"

#include <cmath>
#include <sstream>

#include "core/quadrature.hpp"
#include "core/units.hpp"

namespace skyrmech {

namespace {

const quadrature::Options kFieldQuad{1e-9, 1e-30, 30};

void check_point(double z) {
  require(std::isfinite(z) && z > 0.0, "tip field: z must be positive (outside the tip body)");
}

}  // namespace

void TipGeometry::validate() const {
  require(r_a > 0.0 && r_a <= r_b, "tip geometry: need 0 < r_a <= r_b");
  require(h_tip > 0.0, "tip geometry: h_tip must be positive");
  require(s_nm >= 0.0, "tip geometry: cap thickness must be non-negative");
  require(mu0_ms > 0.0, "tip geometry: mu0*Ms must be positive");
}

double tip_radius_at(const TipGeometry& geom, double z_prime) {
  const double lo = -geom.h_tip - geom.s_nm;
  const double hi = -geom.s_nm;
  const double slack = 1e-12 * (geom.h_tip + geom.s_nm);
  if (!(z_prime >= lo - slack && z_prime <= hi + slack)) {
    std::ostringstream msg;
    msg << "tip_radius_at: z' = " << z_prime << " outside slab [" << lo << ", " << hi << "]";
    fail(ErrorCode::OutOfSlab, msg.str());
  }
  return (geom.r_a - geom.r_b) / geom.h_tip * (z_prime + geom.s_nm) + geom.r_a;
}

double bz_on_axis_slab(const TipGeometry& geom, double z, double z_lo, double z_hi) {
  geom.validate();
  check_point(z);
  auto integrand = [&](double zp) {
    const double r = tip_radius_at(geom, zp);
    const double u = z - zp;
    const double d = r * r + u * u;
    return r * r / (d * std::sqrt(d));
  };
  return 0.5 * geom.mu0_ms * quadrature::adaptive(integrand, z_lo, z_hi, kFieldQuad).value;
}

double bz_on_axis(const TipGeometry& geom, double z) {
  return bz_on_axis_slab(geom, z, -geom.h_tip - geom.s_nm, -geom.s_nm);
}

double gradient_on_axis(const TipGeometry& geom, double z) {
  geom.validate();
  check_point(z);
  auto integrand = [&](double zp) {
    const double r = tip_radius_at(geom, zp);
    const double u = z - zp;
    const double d = r * r + u * u;
    return r * r * u / (d * d * std::sqrt(d));
  };
  const auto q = quadrature::adaptive(integrand, -geom.h_tip - geom.s_nm, -geom.s_nm, kFieldQuad);
  return -1.5 * geom.mu0_ms * q.value;
}

double bz_off_axis(const TipGeometry& geom, double rho, double z) {
  geom.validate();
  check_point(z);
  require(std::isfinite(rho) && rho >= 0.0, "bz_off_axis: rho must be non-negative");
  auto integrand = [&](double zp) {
    const double r = tip_radius_at(geom, zp);
    const double u = z - zp;
    const double plus = (r + rho) * (r + rho) + u * u;
    const double minus = (r - rho) * (r - rho) + u * u;
    const double k2 = 4.0 * r * rho / plus;
    if (!(k2 >= 0.0 && k2 < 1.0)) {
      std::ostringstream msg;
      msg << "bz_off_axis: elliptic modulus^2 = " << k2 << " left [0, 1)";
      fail(ErrorCode::ModulusOutOfRange, msg.str());
    }
    const double k = std::sqrt(k2);
    const double kk = std::comp_ellint_1(k);
    const double ee = std::comp_ellint_2(k);
    return (kk + (r * r - rho * rho - u * u) / minus * ee) / std::sqrt(plus);
  };
  const auto q = quadrature::adaptive(integrand, -geom.h_tip - geom.s_nm, -geom.s_nm, kFieldQuad);
  return geom.mu0_ms / (2.0 * units::pi) * q.value;
}

FieldSample sample_on_axis(const TipGeometry& geom, double z) {
  return {0.0, z, bz_on_axis(geom, z), gradient_on_axis(geom, z)};
}

}  // namespace skyrmech
