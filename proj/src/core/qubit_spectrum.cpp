#include "core/qubit_spectrum.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>
#include <sstream>

#include "core/quadrature.hpp"
#include "core/units.hpp"

namespace skyrmech {

using units::pi;

void SkyrmionMaterial::validate() const {
  require(j1_mev > 0.0, "material: j1 must be positive");
  require(j2_mev > 0.0, "material: j2 must be positive");
  require(lattice_a_nm > 0.0, "material: lattice constant must be positive");
  require(spin_sbar > 0.0, "material: effective spin must be positive");
  require(std::isfinite(field_h_tesla) && std::isfinite(anisotropy_k_mev) &&
              std::isfinite(efield_v_per_m) && std::isfinite(polarization_c_per_m),
          "material: non-finite parameter");
}

double SkyrmionMaterial::zeeman_energy() const {
  return lande_g * units::mu_bohr * field_h_tesla;
}

double SkyrmionMaterial::h_reduced() const { return zeeman_energy() / (j1_mev * units::mev); }

double SkyrmionMaterial::kappa_reduced() const { return anisotropy_k_mev / j1_mev; }

double SkyrmionMaterial::ell() const { return std::sqrt(j2_mev / j1_mev); }

std::complex<double> SkyrmionMaterial::profile_exponent() const {
  const std::complex<double> inner(1.0 - 4.0 * (h_reduced() + kappa_reduced()), 0.0);
  const std::complex<double> y_tilde = std::sqrt(inner);
  return std::sqrt(-1.0 + y_tilde) / std::sqrt(2.0);
}

double skyrmion_profile(const SkyrmionMaterial& material, double rho) {
  require(rho >= 0.0, "skyrmion_profile: rho must be non-negative");
  const auto y = material.profile_exponent();
  return pi / std::sqrt(rho * rho + 1.0) * std::exp(-y.real() * rho) * std::cos(-y.imag() * rho);
}

double skyrmion_profile_slope(const SkyrmionMaterial& material, double rho) {
  const auto y = material.profile_exponent();
  const double a = y.real();
  const double b = y.imag();
  const double s = rho * rho + 1.0;
  const double c = std::cos(b * rho);
  const double sn = std::sin(b * rho);
  return pi * std::exp(-a * rho) *
         (-rho * c / (s * std::sqrt(s)) + (-a * c - b * sn) / std::sqrt(s));
}

double skyrmion_radius(const SkyrmionMaterial& material) {
  auto f = [&](double rho) { return skyrmion_profile(material, rho) - pi / 2.0; };
  double lo = 0.0;
  const double step = 1e-2;
  double hi = step;
  while (f(hi) > 0.0) {
    lo = hi;
    hi += step;
    if (hi > 1e4) fail(ErrorCode::InvalidArgument, "skyrmion_radius: profile never reaches pi/2");
  }
  boost::uintmax_t iters = 200;
  auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (a + b);
}

double skyrmion_radius_nm(const SkyrmionMaterial& material) {
  return skyrmion_radius(material) * material.ell() * material.lattice_a_nm;
}

namespace {

double measure_weight(RadialMeasure m, double rho) {
  return m == RadialMeasure::Area ? 2.0 * pi * rho : 1.0;
}

// d Theta0/d rho + sin(2 Theta0) / (2 rho); the second term tends to
// Theta0'(0) at the origin because Theta0(0) = pi.
double polarization_integrand(const SkyrmionMaterial& m, double rho) {
  const double slope = skyrmion_profile_slope(m, rho);
  if (rho < 1e-7) return 2.0 * slope;
  return slope + std::sin(2.0 * skyrmion_profile(m, rho)) / (2.0 * rho);
}

void check_tail(const std::function<double(double)>& f, double cutoff, const char* what) {
  double peak = 0.0;
  const int n = 4000;
  for (int i = 0; i <= n; ++i) peak = std::max(peak, std::abs(f(cutoff * i / n)));
  double tail = 0.0;
  for (int i = 0; i <= 100; ++i) tail = std::max(tail, std::abs(f(cutoff * (0.99 + 0.01 * i / 100))));
  if (peak > 0.0 && tail > 1e-12 * peak) {
    std::ostringstream msg;
    msg << "qubit_coefficients: " << what << " integrand tail " << tail / peak
        << " of peak at cutoff " << cutoff << " (profile not localized enough)";
    fail(ErrorCode::InvalidArgument, msg.str());
  }
}

}  // namespace

QubitCoefficients qubit_coefficients(const SkyrmionMaterial& material,
                                     const CoefficientOptions& options, Warnings* warnings) {
  material.validate();
  require(options.quadrature_cutoff > 0.0, "qubit_coefficients: cutoff must be positive");
  const double j_lambda = material.j1_mev * units::mev;
  const double to_angular = j_lambda / units::hbar;

  QubitCoefficients c;
  const double h_bar = material.zeeman_energy() * material.spin_sbar / j_lambda;
  c.hz = h_bar * to_angular;

  const double kappa_bar = material.anisotropy_k_mev * units::mev * material.spin_sbar / j_lambda;
  const double cutoff = options.quadrature_cutoff;
  const quadrature::Options qopts{1e-9, 0.0, 30};

  switch (options.kappa_convention) {
    case KappaConvention::Literal:
      c.kappa = kappa_bar * to_angular;
      warn(warnings,
           "kappa uses the literal convention: the printed normalization is a ratio of identical "
           "integrals, so kappa = kappa_bar");
      break;
    case KappaConvention::AreaRatio: {
      auto one_minus_cos = [&](double rho) {
        return (1.0 - std::cos(skyrmion_profile(material, rho))) *
               measure_weight(options.measure, rho);
      };
      auto squared = [&](double rho) {
        const double v = 1.0 - std::cos(skyrmion_profile(material, rho));
        return v * v * measure_weight(options.measure, rho);
      };
      check_tail(one_minus_cos, cutoff, "(1 - cos Theta0)");
      const double num = quadrature::adaptive(squared, 0.0, cutoff, qopts).value;
      const double den = quadrature::adaptive(one_minus_cos, 0.0, cutoff, qopts).value;
      c.kappa = kappa_bar * num / (den * den) * to_angular;
      break;
    }
    case KappaConvention::Numeric:
      c.kappa = options.kappa_numeric;
      break;
  }

  const double eps_bar = std::pow(material.lattice_a_nm * units::nm, 3) * material.efield_v_per_m *
                         material.polarization_c_per_m * material.spin_sbar / j_lambda;
  if (eps_bar == 0.0) {
    c.eps = 0.0;
  } else {
    auto integrand = [&](double rho) {
      return polarization_integrand(material, rho) * measure_weight(options.measure, rho);
    };
    check_tail(integrand, cutoff, "polarization");
    const double integral = quadrature::adaptive(integrand, 0.0, cutoff, qopts).value;
    c.eps = eps_bar * integral * to_angular;
  }

  if (!(c.kappa > 0.0) || !std::isfinite(c.hz) || !std::isfinite(c.eps))
    fail(ErrorCode::InvalidArgument, "qubit_coefficients: kappa must be positive and finite");
  return c;
}

namespace {

struct Diagonalized {
  Eigen::VectorXd energies;
  Eigen::MatrixXd states;
  int center = 0;
};

Diagonalized diagonalize_charge_basis(const QubitCoefficients& c, int s_max) {
  const int dim = 2 * s_max + 1;
  const int center = static_cast<int>(std::lround(c.hz / (2.0 * c.kappa)));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double s = center - s_max + i;
    h(i, i) = c.kappa * s * s - c.hz * s;
    if (i + 1 < dim) {
      h(i, i + 1) = -0.5 * c.eps;
      h(i + 1, i) = -0.5 * c.eps;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors(), center};
}

}  // namespace

QubitSpectrum diagonalize_qubit(const QubitCoefficients& coeffs, int s_max) {
  require(s_max >= 5, "diagonalize_qubit: s_max must be at least 5");
  require(coeffs.kappa > 0.0 && std::isfinite(coeffs.hz) && std::isfinite(coeffs.eps),
          "diagonalize_qubit: kappa must be positive, coefficients finite");

  const auto base = diagonalize_charge_basis(coeffs, s_max);
  const auto wider = diagonalize_charge_basis(coeffs, s_max + 5);
  for (int k = 0; k < 3; ++k) {
    const double scale = std::max(std::abs(base.energies(k)), coeffs.kappa);
    const double shift = std::abs(base.energies(k) - wider.energies(k));
    if (shift > 1e-10 * scale) {
      std::ostringstream msg;
      msg << "diagonalize_qubit: level " << k << " moved by " << shift / scale
          << " (relative) when s_max went " << s_max << " -> " << s_max + 5;
      fail(ErrorCode::TruncationNotConverged, msg.str());
    }
  }

  QubitSpectrum out;
  out.energies.assign(base.energies.data(), base.energies.data() + base.energies.size());
  out.states = base.states;
  out.s_max = s_max;
  out.s_center = base.center;
  out.omega_q = out.energies[1] - out.energies[0];
  out.omega_ex = out.energies[2] - out.energies[1];
  out.anharmonic = std::abs(out.omega_ex - out.omega_q) > 0.2 * out.omega_q;
  return out;
}

TwoLevelQubit two_level_reduction(const QubitCoefficients& coeffs) {
  TwoLevelQubit q;
  q.a0 = coeffs.kappa - coeffs.hz;
  q.b0 = coeffs.eps;
  q.omega_q = std::hypot(q.a0, q.b0);
  // tan(2 theta) = b0 / a0, resolved at a0 = 0 by its limit.
  q.theta = q.a0 == 0.0 ? pi / 4.0 : 0.5 * std::atan(q.b0 / q.a0);
  return q;
}

TwoLevelQubit two_level_reduction(const QubitCoefficients& coeffs,
                                  const QubitSpectrum& spectrum, Warnings* warnings) {
  if (!spectrum.anharmonic) {
    std::ostringstream msg;
    msg << "two_level_reduction: |omega_ex - omega_q| = "
        << std::abs(spectrum.omega_ex - spectrum.omega_q) << " is not above 20% of omega_q = "
        << spectrum.omega_q << "; the two-level truncation is questionable";
    warn(warnings, msg.str());
  }
  return two_level_reduction(coeffs);
}

DressedQubit dressed_frame(const TwoLevelQubit& qubit, double rabi_mw, double omega_mw) {
  DressedQubit d;
  d.omega_mw = omega_mw;
  d.rabi_mw = rabi_mw;
  d.delta_qmw = qubit.omega_q - omega_mw;
  d.omega_tilde = std::hypot(d.delta_qmw, rabi_mw);
  double two_beta = 0.0;
  if (d.delta_qmw == 0.0)
    two_beta = rabi_mw == 0.0 ? 0.0 : std::copysign(pi / 2.0, rabi_mw);
  else
    two_beta = std::atan(rabi_mw / d.delta_qmw);
  d.beta = 0.5 * two_beta;
  d.coupling_scale = std::cos(two_beta);
  return d;
}

double microwave_drive_strength(double lande_g, double b0_tesla, double sbar) {
  return lande_g * units::mu_bohr * b0_tesla * sbar / 2.0 / units::hbar;
}

}  // namespace skyrmech
