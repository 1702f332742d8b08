// dynamics.hpp: system Hamiltonians for the Rabi, shared-mode and chain
// configurations, and their evolution.

#pragma once

#include <string>
#include <vector>

#include "core/lindblad.hpp"
#include "core/operators.hpp"
#include "core/topo_bath.hpp"

namespace skyrmech {

enum class Restriction { Full, SingleExcitation };

struct SpaceSpec {
  int n_qubits = 1;
  std::vector<int> mode_dims;
  Restriction restriction = Restriction::Full;

  /// 2^n * prod(dims) (full) or 1 + n_qubits + n_modes (single excitation).
  long dimension() const;
  /// Factor dimensions, qubits first.
  std::vector<int> factor_dims() const;
};

/// Delta_q/2 sz + Delta_m b^dag b + lambda (b + b^dag) sx, or with rwa the
/// Jaynes-Cummings coupling lambda (s+ b + s- b^dag). Space: qubit x Fock(n_max).
OperatorMatrix build_rabi_hamiltonian(double delta_q, double delta_m_eff, double lambda_eff,
                                      int n_max, bool rwa = false);

/// Two qubits sharing one mode, coupling (b + b^dag)(sx1 - sx2).
/// Space: qubit1 x qubit2 x Fock(n_max).
OperatorMatrix build_two_qubit_hamiltonian(double delta_q, double delta_m_eff, double lambda_eff,
                                           int n_max);

struct SchriefferWolff {
  double lambda_ss = 0.0;
  DenseMat h_eff;  // Lambda (sx1 - sx2)^2 on qubit1 x qubit2
};

SchriefferWolff sw_effective_two_qubit(double lambda_eff, double delta_m_eff,
                                       Warnings* warnings = nullptr);

/// Qubits coupled (excitation-conserving) to sites of an SSH chain.
/// Single-excitation basis: [vacuum, qubit 0..n-1, site 0..2N-1] with site
/// order A_0, B_0, A_1, ... Energies are excitation energies relative to the
/// resonator frequency. Full space: qubits x Fock(n_max) per site.
OperatorMatrix build_array_hamiltonian(const SSHChain& chain,
                                       const std::vector<SiteRef>& placements, double coupling,
                                       double delta_q, const SpaceSpec& space);

/// Total excitation number on the same space.
OperatorMatrix excitation_number(const SSHChain& chain, int n_qubits, const SpaceSpec& space);

/// Exchange Hamiltonian -sum G_ij (s+^i s-^j + h.c.) on n qubits (full 2^n).
OperatorMatrix effective_spin_hamiltonian(const Eigen::MatrixXd& couplings);

struct AmplitudeResult {
  std::vector<double> times;
  std::vector<std::vector<double>> populations;  // [basis index][time]
  double max_norm_error = 0.0;
};

/// Unitary evolution of an amplitude vector under a Hermitian H by
/// eigendecomposition. With check_vacuum, row/column 0 is the vacuum and
/// must not couple to anything (NotExcitationConserving otherwise).
AmplitudeResult single_excitation_evolve(const DenseMat& h, const DenseVec& psi0,
                                         const std::vector<double>& times,
                                         bool check_vacuum = true);

/// Uniform grid of n points on [t0, t1].
std::vector<double> linear_grid(double t0, double t1, int n);

}  // namespace skyrmech
