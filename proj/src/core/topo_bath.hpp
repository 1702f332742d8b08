// topo_bath.hpp: SSH phonon chain analytics. Cell n holds sites A_n, B_n;
// A_n-B_n hop with G1 = G(1+delta), B_n-A_{n+1} with G2 = G(1-delta).
// Energies are measured from the common resonator frequency.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace skyrmech {

enum class Sublattice { A, B };
enum class Boundary { Periodic, Open };

struct SiteRef {
  int cell = 0;
  Sublattice sub = Sublattice::A;
  bool operator==(const SiteRef& o) const { return cell == o.cell && sub == o.sub; }
};

const char* to_string(Sublattice s);

struct SSHChain {
  int n_cells = 10;
  double hop_g = 1.0;
  double dimerization = 0.25;
  double omega_m_ref = 0.0;
  Boundary boundary = Boundary::Periodic;

  void validate() const;
  double g1() const { return hop_g * (1.0 + dimerization); }
  double g2() const { return hop_g * (1.0 - dimerization); }
  int n_sites() const { return 2 * n_cells; }
  /// Index 2*cell + (sub == B); periodic chains wrap the cell, open chains
  /// reject out-of-range cells.
  int site_index(SiteRef site) const;
  /// Real symmetric 2N x 2N hopping matrix.
  Eigen::MatrixXd hopping_matrix() const;
};

/// (Omega_+, Omega_-) at wavenumber k.
std::pair<double, double> dispersion(const SSHChain& chain, double k);
double band_gap(const SSHChain& chain);

/// arg(G1 + G2 e^{-ik}), principal value.
double bloch_phase(const SSHChain& chain, double k);
/// Phase along an increasing k grid, unwrapped to a continuous branch.
std::vector<double> bloch_phase_sweep(const SSHChain& chain, const std::vector<double>& ks);

struct BoundState {
  double energy = 0.0;
  std::complex<double> qubit_amplitude;
  std::vector<int> cells;
  std::vector<std::complex<double>> amp_a;
  std::vector<std::complex<double>> amp_b;
  SiteRef attach;
  double chirality = 0.0;

  double weight(size_t i) const { return std::norm(amp_a[i]) + std::norm(amp_b[i]); }
  /// |C_e|^2 + sum over the stored cells.
  double stored_norm() const;
};

/// (sum_{j>0} w_j - sum_{j<0} w_j) / sum_{j != 0} w_j, cells relative to the
/// attachment cell.
double chirality(const std::vector<int>& cells, const std::vector<double>& weights, int attach_cell);

struct QuadratureOptions {
  int n_k = 4096;
  double gap_guard = 0.95;
};

/// Bound state of one qubit attached at (cell 0, attach) of the infinite
/// chain, from periodic-trapezoid k integrals. Cells j_min..j_max are
/// returned; normalization is over the whole chain (Parseval). EnergyInBand
/// unless |e_bs| < gap_guard * 2G|delta|.
BoundState bound_state_quadrature(const SSHChain& chain, double coupling, double e_bs,
                                  Sublattice attach, int j_min, int j_max,
                                  const QuadratureOptions& options = {});

/// Closed-form zero-energy bound state, normalized over the infinite chain.
BoundState bound_state_closed_form(const SSHChain& chain, double coupling, Sublattice attach,
                                   int j_min, int j_max);

/// Exact eigenstate of the qubit + periodic N-cell ring at energy e (the
/// qubit detuning is whatever makes e an eigenvalue). Valid inside the bands
/// as long as e avoids the discrete ring levels. Cells are numbered from
/// -(N/2) relative to the attachment cell.
BoundState bound_state_ring(const SSHChain& chain, double coupling, double e, Sublattice attach);

/// Qubit detuning for which e is a bound-state energy (self-energy relation).
double bound_state_detuning(const SSHChain& chain, double coupling, double e, Sublattice attach,
                            const QuadratureOptions& options = {});

struct VacancyState {
  double energy = 0.0;
  Eigen::VectorXd amplitudes;        // on the 2N - 1 remaining sites
  std::vector<SiteRef> sites;        // site labels of the remaining sites
  double participation_ratio = 0.0;  // 1 / sum |psi|^4
};

/// Removes one site of an open chain and returns the eigenvector with the
/// smallest |energy|.
VacancyState vacancy_edge_state(const SSHChain& chain, SiteRef vacancy);

/// Markovian exchange between qubits attached at the two sites (Eq. 38 for
/// delta > 0, reflection-mirrored for delta < 0). Symmetric in its arguments.
double effective_coupling(const SSHChain& chain, double coupling, SiteRef place_i, SiteRef place_j);

/// Pairwise table G_ij (zero diagonal).
Eigen::MatrixXd effective_coupling_matrix(const SSHChain& chain, double coupling,
                                          const std::vector<SiteRef>& placements);

/// Single-excitation block of -sum_{i<j} G_ij (s+^i s-^j + h.c.).
Eigen::MatrixXd effective_exchange_block(const Eigen::MatrixXd& couplings);

/// Fig. 7 rescaling: G = g0 e^{2r}, coupling = coupling0 e^{r}.
SSHChain squeezed_chain(const SSHChain& base, double r);

}  // namespace skyrmech
