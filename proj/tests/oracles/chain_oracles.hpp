// Lattice references: explicit SSH matrices, ring resolvents and a winding
// count from the Bloch vector.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace oracle {

/// SSH hopping matrix with site order A0, B0, A1, ... built independently.
inline Eigen::MatrixXd ssh_matrix(int cells, double g1, double g2, bool ring) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * cells, 2 * cells);
  for (int n = 0; n < cells; ++n) {
    h(2 * n, 2 * n + 1) = h(2 * n + 1, 2 * n) = g1;
    if (n + 1 < cells || ring) {
      const int next = (2 * n + 2) % (2 * cells);
      h(2 * n + 1, next) = h(next, 2 * n + 1) = g2;
    }
  }
  return h;
}

/// Ring Green's function at zero energy, (0 - H)^{-1} = -H^{-1}.
inline Eigen::MatrixXd ring_resolvent_zero(int cells, double g1, double g2) {
  return -ssh_matrix(cells, g1, g2, true).inverse();
}

/// Qubit (index 0, zero detuning) coupled with strength g to `site` of the
/// ring; returns the normalized zero-energy eigenvector of the odd-sized
/// bipartite matrix with a positive qubit amplitude.
inline Eigen::VectorXd qubit_ring_zero_mode(int cells, double g1, double g2, double g, int site) {
  const int n = 2 * cells + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  h.bottomRightCorner(n - 1, n - 1) = ssh_matrix(cells, g1, g2, true);
  h(0, site + 1) = h(site + 1, 0) = g;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::Index best = 0;
  es.eigenvalues().cwiseAbs().minCoeff(&best);
  Eigen::VectorXd v = es.eigenvectors().col(best);
  if (v(0) < 0) v = -v;
  return v;
}

/// Winding of the Bloch vector g1 + g2 e^{ik} around the origin, counted
/// from accumulated phase increments on an n-point loop.
inline int winding_number(double g1, double g2, int n) {
  const double pi = std::acos(-1.0);
  double total = 0.0;
  std::complex<double> prev(g1 + g2, 0.0);
  for (int i = 1; i <= n; ++i) {
    const double k = 2 * pi * i / n;
    const std::complex<double> cur = g1 + g2 * std::exp(std::complex<double>(0.0, k));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2 * pi)));
}

}  // namespace oracle
