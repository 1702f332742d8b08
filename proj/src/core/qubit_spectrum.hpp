// qubit_spectrum.hpp: skyrmion profile, helicity-qubit coefficients, the
// charge-basis spectrum and the two-level / microwave-dressed reductions.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/error.hpp"

namespace skyrmech {

/// Material parameters in the units they are usually quoted in. The
/// conversion to SI and to angular frequencies happens in the accessors.
struct SkyrmionMaterial {
  double j1_mev = 1.0;
  double j2_mev = 20.0;
  double lattice_a_nm = 0.5;
  double field_h_tesla = 0.035;
  double anisotropy_k_mev = 0.15;
  double spin_sbar = 20.0;
  double efield_v_per_m = 80.0;
  double polarization_c_per_m = 0.2;
  double lande_g = 2.0;

  void validate() const;

  /// Zeeman energy of the applied field, g mu_B H, in joules.
  double zeeman_energy() const;
  /// h = g mu_B H / J1.
  double h_reduced() const;
  /// kappa_z = K / J1.
  double kappa_reduced() const;
  /// ell = sqrt(J2 / J1); physical radius = rho * ell * a.
  double ell() const;
  /// Profile exponent Y = sqrt(-1 + sqrt(1 - 4(h + kappa_z))) / sqrt(2),
  /// principal branches.
  std::complex<double> profile_exponent() const;
};

/// Approximate steady-state polar angle Theta0(rho).
double skyrmion_profile(const SkyrmionMaterial& material, double rho);
/// d Theta0 / d rho, closed form.
double skyrmion_profile_slope(const SkyrmionMaterial& material, double rho);
/// Smallest rho with Theta0(rho) = pi/2 (dimensionless).
double skyrmion_radius(const SkyrmionMaterial& material);
/// Same radius in nanometres.
double skyrmion_radius_nm(const SkyrmionMaterial& material);

enum class KappaConvention {
  Literal,    // kappa = kappa_bar (the printed ratio of identical integrals)
  AreaRatio,  // kappa_bar * int (1-cos)^2 / [int (1-cos)]^2
  Numeric,    // user supplied
};

enum class RadialMeasure {
  Area,    // 2 pi rho d rho
  Radial,  // d rho
};

struct CoefficientOptions {
  KappaConvention kappa_convention = KappaConvention::Literal;
  double kappa_numeric = 0.0;  // rad/s, used with KappaConvention::Numeric
  RadialMeasure measure = RadialMeasure::Area;
  double quadrature_cutoff = 200.0;
};

/// Coefficients of kappa S^2 - h S - eps cos(phi0), as angular frequencies.
struct QubitCoefficients {
  double kappa = 0.0;
  double hz = 0.0;
  double eps = 0.0;
};

QubitCoefficients qubit_coefficients(const SkyrmionMaterial& material,
                                     const CoefficientOptions& options = {},
                                     Warnings* warnings = nullptr);

struct QubitSpectrum {
  std::vector<double> energies;  // ascending
  Eigen::MatrixXd states;        // columns; row i is charge s = s_center - s_max + i
  int s_max = 0;
  int s_center = 0;
  double omega_q = 0.0;  // E1 - E0
  double omega_ex = 0.0; // E2 - E1
  bool anharmonic = false;

  int charge_of_row(int row) const { return s_center - s_max + row; }
};

/// Diagonalizes the (2 s_max + 1)-dimensional charge-basis matrix centred on
/// the charge closest to hz / (2 kappa). Verifies that s_max + 5 moves the
/// lowest three levels by less than 1e-10 of max(|E|, kappa); otherwise
/// ErrorCode::TruncationNotConverged.
QubitSpectrum diagonalize_qubit(const QubitCoefficients& coeffs, int s_max);

struct TwoLevelQubit {
  double a0 = 0.0;
  double b0 = 0.0;
  double omega_q = 0.0;
  double theta = 0.0;
};

TwoLevelQubit two_level_reduction(const QubitCoefficients& coeffs);
/// As above, but warns when the spectrum is not anharmonic enough for the
/// two-level truncation.
TwoLevelQubit two_level_reduction(const QubitCoefficients& coeffs,
                                  const QubitSpectrum& spectrum, Warnings* warnings);

struct DressedQubit {
  double omega_mw = 0.0;
  double rabi_mw = 0.0;
  double delta_qmw = 0.0;
  double beta = 0.0;
  double omega_tilde = 0.0;
  double coupling_scale = 1.0;  // cos(2 beta)
};

DressedQubit dressed_frame(const TwoLevelQubit& qubit, double rabi_mw, double omega_mw);

/// Omega_mw = g mu_B B0 S / 2 as an angular frequency.
double microwave_drive_strength(double lande_g, double b0_tesla, double sbar);

}  // namespace skyrmech
