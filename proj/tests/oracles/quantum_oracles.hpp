// Dense references for the dynamics: closed-form Jaynes-Cummings evolution,
// fixed-step RK4 of the master equation and dense diagonalization.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

/// Resonant JC from |e,0>: P_e(t) = cos^2(lambda t).
inline double jc_excited_population(double lambda, double t) {
  const double c = std::cos(lambda * t);
  return c * c;
}

/// Detuned JC from |e,0>: P_e = 1 - (4 l^2 / W^2) sin^2(W t / 2), W^2 = d^2 + 4 l^2.
inline double jc_detuned_population(double lambda, double detuning, double t) {
  const double w = std::sqrt(detuning * detuning + 4 * lambda * lambda);
  const double s = std::sin(0.5 * w * t);
  return 1.0 - 4 * lambda * lambda / (w * w) * s * s;
}

/// Plain fixed-step RK4 on d rho/dt = -i[H, rho] + sum g (L rho L^+ - {L^+L, rho}/2).
inline cmat rk4_lindblad(const cmat& h, const std::vector<std::pair<cmat, double>>& jumps,
                         cmat rho, double t, int steps) {
  const std::complex<double> i(0.0, 1.0);
  auto rhs = [&](const cmat& r) {
    cmat out = -i * (h * r - r * h);
    for (const auto& [l, g] : jumps) {
      const cmat ld = l.adjoint();
      out += g * (l * r * ld - 0.5 * (ld * l * r + r * ld * l));
    }
    return out;
  };
  const double dt = t / steps;
  for (int s = 0; s < steps; ++s) {
    const cmat k1 = rhs(rho);
    const cmat k2 = rhs(rho + 0.5 * dt * k1);
    const cmat k3 = rhs(rho + 0.5 * dt * k2);
    const cmat k4 = rhs(rho + dt * k3);
    rho += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return rho;
}

/// exp(-i H t) psi by dense diagonalization.
inline cvec propagate(const cmat& h, const cvec& psi, double t) {
  Eigen::SelfAdjointEigenSolver<cmat> es(h);
  const std::complex<double> i(0.0, 1.0);
  cvec c = es.eigenvectors().adjoint() * psi;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-i * es.eigenvalues()(k) * t);
  return es.eigenvectors() * c;
}

/// Charge-basis matrix kappa s^2 - h s - eps cos(phi) on s in [-n, n].
inline Eigen::VectorXd charge_basis_levels(double kappa, double hz, double eps, int n) {
  const int dim = 2 * n + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double s = k - n;
    m(k, k) = kappa * s * s - hz * s;
    if (k + 1 < dim) m(k, k + 1) = m(k + 1, k) = -0.5 * eps;
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

}  // namespace oracle
