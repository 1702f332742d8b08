// device.hpp: cantilever mechanics, coupling budget, parametric squeezing and
// capacitive phonon hopping. Frequencies are angular (rad/s) unless a name
// ends in _hz.

#pragma once

#include <utility>

#include "core/error.hpp"

namespace skyrmech {

struct CantileverGeometry {
  double length_l = 5.6e-6;
  double width_w = 0.05e-6;
  double thickness_t = 0.04e-6;
  double density = 2329.0;
  double youngs = 1.3e11;

  void validate(Warnings* warnings = nullptr) const;
  double geometric_mass() const { return density * length_l * width_w * thickness_t; }
};

/// Which mass enters z0. Geometric is rho*l*w*t; TipModal is the effective
/// mass seen at the free end for the fundamental flexural mode, k/omega^2
/// with k = 3 E I / l^3 (about 0.243 of the geometric mass).
enum class MassConvention { Geometric, TipModal };

struct ZeroPointMotion {
  double z0 = 0.0;    // m
  double mass = 0.0;  // kg
};

/// Fundamental flexural frequency 3.516 t sqrt(E / 12 rho) / l^2, in Hz.
double cantilever_frequency(const CantileverGeometry& geom);

double effective_mass(const CantileverGeometry& geom, MassConvention convention);

ZeroPointMotion zero_point_motion(const CantileverGeometry& geom, double omega_m,
                                  MassConvention convention = MassConvention::Geometric);
/// z0 for an explicit mass.
double zero_point_motion(double mass, double omega_m);

/// lambda = g mu_B S G z0 / hbar.
double bare_coupling(double z0, double gradient, double sbar, double lande_g);

/// 4 lambda^2 / (gamma_m gamma_sky).
double cooperativity(double lambda, double gamma_m, double gamma_sky);

struct DriveElectrode {
  double area_s = 1e-12;  // m^2
  double gap_d = 100e-9;  // m
  double eps_r = 1.0;
  double v0 = 1.0;        // V
  double vp = 0.0;        // V
  double omega_e = 0.0;   // rad/s

  void validate() const;
};

/// Stiffness modulation 2 eps0 eps_r S V0 Vp / d^3 (N/m).
double stiffness_modulation(const DriveElectrode& electrode);
/// Omega_E = -dk_E z0^2 / hbar.
double parametric_drive_strength(const DriveElectrode& electrode, double z0);

struct SqueezeFrame {
  double r = 0.0;
  double delta_m = 0.0;
  double delta_m_eff = 0.0;
  double omega_drive = 0.0;
  double lambda_eff = 0.0;
};

/// SqueezeDiverges if |omega_e_drive| >= |delta_m|.
SqueezeFrame squeeze_frame(double delta_m, double omega_e_drive, double lambda_bar);
/// Frame for a prescribed r (drive chosen as delta_m tanh 2r).
SqueezeFrame squeeze_frame_from_r(double delta_m, double r, double lambda_bar);

enum class CouplingRegime { SC, USC, DSC };
const char* to_string(CouplingRegime regime);

/// g_c = sqrt(delta_q delta_m_eff); InvalidRegimeInput unless the product is
/// positive.
double critical_coupling(double delta_q, double delta_m_eff);
CouplingRegime coupling_regime(double lambda_eff, double delta_q, double delta_m_eff);

struct HoppingLink {
  double voltage_u = 1.0;
  double cap_c = 0.1e-15;
  double cap_w = 0.0;
  double gap_h = 100e-9;
  double z0 = 0.0;
  double bare_g = 0.0;
  double dressed_g = 0.0;
};

/// C_W = eps0 * electrode spacing, the estimate used for the coupling wire.
double wire_capacitance(double spacing);

/// bare g = z0^2 U^2 C^2 C_W^2 / [hbar h^2 (2C + C_W)^3]; dressed = g e^{2r}/2.
HoppingLink hopping_rate(double voltage_u, double cap_c, double cap_w, double gap_h, double z0,
                         double r = 0.0);

/// Voltages realizing dimerization delta with per-link squeeze parameters.
std::pair<double, double> ssh_voltages(double u0, double delta, double r0, double r1, double r2);

}  // namespace skyrmech
