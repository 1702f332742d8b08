#include "core/device.hpp"

#include <cmath>
#include <sstream>

#include "core/units.hpp"

namespace skyrmech {

void CantileverGeometry::validate(Warnings* warnings) const {
  require(length_l > 0.0 && width_w > 0.0 && thickness_t > 0.0,
          "cantilever: dimensions must be positive");
  require(density > 0.0 && youngs > 0.0, "cantilever: density and Young's modulus must be positive");
  if (length_l / thickness_t < 10.0) {
    std::ostringstream msg;
    msg << "cantilever: l/t = " << length_l / thickness_t
        << " < 10, thin-beam frequency formula is unreliable";
    warn(warnings, msg.str());
  }
}

double cantilever_frequency(const CantileverGeometry& geom) {
  geom.validate();
  return 3.516 * geom.thickness_t * std::sqrt(geom.youngs / (12.0 * geom.density)) /
         (geom.length_l * geom.length_l);
}

double effective_mass(const CantileverGeometry& geom, MassConvention convention) {
  geom.validate();
  if (convention == MassConvention::Geometric) return geom.geometric_mass();
  // k / omega^2 with k = 3 E I / l^3 and the clamped-beam fundamental
  // omega = 3.516 sqrt(E I / rho A) / l^2 reduces to a fixed mass ratio.
  return 3.0 / (3.516 * 3.516) * geom.geometric_mass();
}

double zero_point_motion(double mass, double omega_m) {
  require(mass > 0.0, "zero_point_motion: mass must be positive");
  require(omega_m > 0.0, "zero_point_motion: omega_m must be positive");
  return std::sqrt(units::hbar / (2.0 * mass * omega_m));
}

ZeroPointMotion zero_point_motion(const CantileverGeometry& geom, double omega_m,
                                  MassConvention convention) {
  const double m = effective_mass(geom, convention);
  return {zero_point_motion(m, omega_m), m};
}

double bare_coupling(double z0, double gradient, double sbar, double lande_g) {
  require(z0 >= 0.0 && sbar >= 0.0 && lande_g >= 0.0,
          "bare_coupling: inputs must be non-negative");
  return lande_g * units::mu_bohr * sbar * gradient * z0 / units::hbar;
}

double cooperativity(double lambda, double gamma_m, double gamma_sky) {
  require(gamma_m > 0.0 && gamma_sky > 0.0, "cooperativity: decay rates must be positive");
  return 4.0 * lambda * lambda / (gamma_m * gamma_sky);
}

void DriveElectrode::validate() const {
  require(area_s > 0.0, "electrode: area must be positive");
  require(gap_d > 0.0, "electrode: gap must be positive");
  require(eps_r > 0.0, "electrode: relative permittivity must be positive");
}

double stiffness_modulation(const DriveElectrode& electrode) {
  electrode.validate();
  return 2.0 * units::epsilon0 * electrode.eps_r * electrode.area_s * electrode.v0 * electrode.vp /
         std::pow(electrode.gap_d, 3);
}

double parametric_drive_strength(const DriveElectrode& electrode, double z0) {
  return -stiffness_modulation(electrode) * z0 * z0 / units::hbar;
}

SqueezeFrame squeeze_frame(double delta_m, double omega_e_drive, double lambda_bar) {
  require(std::isfinite(delta_m) && std::isfinite(omega_e_drive) && std::isfinite(lambda_bar),
          "squeeze_frame: non-finite input");
  if (!(std::abs(omega_e_drive) < std::abs(delta_m))) {
    std::ostringstream msg;
    msg << "squeeze_frame: |Omega_E| = " << std::abs(omega_e_drive) << " >= |Delta_m| = "
        << std::abs(delta_m) << " (parametric instability)";
    fail(ErrorCode::SqueezeDiverges, msg.str());
  }
  SqueezeFrame f;
  f.delta_m = delta_m;
  f.omega_drive = omega_e_drive;
  f.r = 0.5 * std::atanh(omega_e_drive / delta_m);
  f.delta_m_eff = delta_m / std::cosh(2.0 * f.r);
  f.lambda_eff = 0.5 * lambda_bar * std::exp(f.r);
  return f;
}

SqueezeFrame squeeze_frame_from_r(double delta_m, double r, double lambda_bar) {
  require(std::isfinite(r), "squeeze_frame_from_r: r must be finite");
  SqueezeFrame f;
  f.r = r;
  f.delta_m = delta_m;
  f.omega_drive = delta_m * std::tanh(2.0 * r);
  f.delta_m_eff = delta_m / std::cosh(2.0 * r);
  f.lambda_eff = 0.5 * lambda_bar * std::exp(r);
  return f;
}

const char* to_string(CouplingRegime regime) {
  switch (regime) {
    case CouplingRegime::SC: return "SC";
    case CouplingRegime::USC: return "USC";
    case CouplingRegime::DSC: return "DSC";
  }
  return "?";
}

double critical_coupling(double delta_q, double delta_m_eff) {
  const double product = delta_q * delta_m_eff;
  if (!(product > 0.0) || !std::isfinite(product)) {
    std::ostringstream msg;
    msg << "coupling_regime: Delta_q * Delta_m_eff = " << product
        << " must be positive for g_c to be defined";
    fail(ErrorCode::InvalidRegimeInput, msg.str());
  }
  return std::sqrt(product);
}

CouplingRegime coupling_regime(double lambda_eff, double delta_q, double delta_m_eff) {
  const double ratio = std::abs(lambda_eff) / critical_coupling(delta_q, delta_m_eff);
  if (ratio < 0.1) return CouplingRegime::SC;
  if (ratio <= 1.0) return CouplingRegime::USC;
  return CouplingRegime::DSC;
}

double wire_capacitance(double spacing) {
  require(spacing > 0.0, "wire_capacitance: spacing must be positive");
  return units::epsilon0 * spacing;
}

HoppingLink hopping_rate(double voltage_u, double cap_c, double cap_w, double gap_h, double z0,
                         double r) {
  require(cap_c > 0.0 && cap_w >= 0.0, "hopping_rate: capacitances must be positive");
  require(gap_h > 0.0, "hopping_rate: gap must be positive");
  require(z0 >= 0.0, "hopping_rate: z0 must be non-negative");
  HoppingLink link;
  link.voltage_u = voltage_u;
  link.cap_c = cap_c;
  link.cap_w = cap_w;
  link.gap_h = gap_h;
  link.z0 = z0;
  const double denom = 2.0 * cap_c + cap_w;
  link.bare_g = z0 * z0 * voltage_u * voltage_u * cap_c * cap_c * cap_w * cap_w /
                (units::hbar * gap_h * gap_h * denom * denom * denom);
  link.dressed_g = 0.5 * link.bare_g * std::exp(2.0 * r);
  return link;
}

std::pair<double, double> ssh_voltages(double u0, double delta, double r0, double r1, double r2) {
  require(std::abs(delta) < 1.0, "ssh_voltages: |delta| must be < 1");
  return {u0 * std::sqrt(1.0 + delta) * std::exp(r0 - r1),
          u0 * std::sqrt(1.0 - delta) * std::exp(r0 - r2)};
}

}  // namespace skyrmech
