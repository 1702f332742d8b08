#include "core/dynamics.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace skyrmech {

long SpaceSpec::dimension() const {
  if (restriction == Restriction::SingleExcitation)
    return 1 + n_qubits + static_cast<long>(mode_dims.size());
  long d = 1L << n_qubits;
  for (int m : mode_dims) d *= m;
  return d;
}

std::vector<int> SpaceSpec::factor_dims() const {
  std::vector<int> dims(n_qubits, 2);
  dims.insert(dims.end(), mode_dims.begin(), mode_dims.end());
  return dims;
}

OperatorMatrix build_rabi_hamiltonian(double delta_q, double delta_m_eff, double lambda_eff,
                                      int n_max, bool rwa) {
  require(n_max >= 2, "build_rabi_hamiltonian: n_max must be >= 2");
  const std::vector<int> dims{2, n_max};
  const SpMat b = embed(annihilation(n_max), 1, dims);
  const SpMat bd = b.adjoint();
  SpMat h = 0.5 * delta_q * embed(sigma_z(), 0, dims) + delta_m_eff * SpMat(bd * b);
  if (rwa)
    h += lambda_eff * SpMat(embed(sigma_plus(), 0, dims) * b + embed(sigma_minus(), 0, dims) * bd);
  else
    h += lambda_eff * SpMat(SpMat(b + bd) * embed(sigma_x(), 0, dims));
  return OperatorMatrix(h);
}

OperatorMatrix build_two_qubit_hamiltonian(double delta_q, double delta_m_eff, double lambda_eff,
                                           int n_max) {
  require(n_max >= 2, "build_two_qubit_hamiltonian: n_max must be >= 2");
  const std::vector<int> dims{2, 2, n_max};
  const SpMat b = embed(annihilation(n_max), 2, dims);
  const SpMat bd = b.adjoint();
  const SpMat sx_diff = embed(sigma_x(), 0, dims) - embed(sigma_x(), 1, dims);
  SpMat h = 0.5 * delta_q * SpMat(embed(sigma_z(), 0, dims) + embed(sigma_z(), 1, dims)) +
            delta_m_eff * SpMat(bd * b) + lambda_eff * SpMat(SpMat(b + bd) * sx_diff);
  return OperatorMatrix(h);
}

SchriefferWolff sw_effective_two_qubit(double lambda_eff, double delta_m_eff, Warnings* warnings) {
  require(delta_m_eff != 0.0, "sw_effective_two_qubit: Delta_m_eff must be non-zero");
  if (std::abs(delta_m_eff) < 5.0 * std::abs(lambda_eff)) {
    std::ostringstream msg;
    msg << "sw_effective_two_qubit: Delta_m_eff/lambda_eff = " << delta_m_eff / lambda_eff
        << " < 5, the perturbative elimination is unreliable";
    warn(warnings, msg.str());
  }
  SchriefferWolff sw;
  sw.lambda_ss = lambda_eff * lambda_eff / delta_m_eff;
  const std::vector<int> dims{2, 2};
  const DenseMat x = DenseMat(embed(sigma_x(), 0, dims) - embed(sigma_x(), 1, dims));
  sw.h_eff = sw.lambda_ss * x * x;
  return sw;
}

namespace {

void check_placements(const SSHChain& chain, const std::vector<SiteRef>& placements) {
  std::set<int> used;
  for (const auto& p : placements) {
    const int idx = chain.site_index(p);
    if (!used.insert(idx).second) {
      std::ostringstream msg;
      msg << "build_array_hamiltonian: two qubits placed on site " << to_string(p.sub) << p.cell;
      fail(ErrorCode::PlacementCollision, msg.str());
    }
  }
}

}  // namespace

OperatorMatrix build_array_hamiltonian(const SSHChain& chain,
                                       const std::vector<SiteRef>& placements, double coupling,
                                       double delta_q, const SpaceSpec& space) {
  chain.validate();
  check_placements(chain, placements);
  const int nq = static_cast<int>(placements.size());
  require(space.n_qubits == nq, "build_array_hamiltonian: space qubit count mismatch");
  require(static_cast<int>(space.mode_dims.size()) == chain.n_sites(),
          "build_array_hamiltonian: space needs one mode per chain site");
  const Eigen::MatrixXd hop = chain.hopping_matrix();
  const int ns = chain.n_sites();

  if (space.restriction == Restriction::SingleExcitation) {
    const int dim = 1 + nq + ns;
    std::vector<Eigen::Triplet<cplx>> t;
    for (int q = 0; q < nq; ++q) {
      if (delta_q != 0.0) t.emplace_back(1 + q, 1 + q, delta_q);
      const int site = 1 + nq + chain.site_index(placements[q]);
      t.emplace_back(1 + q, site, coupling);
      t.emplace_back(site, 1 + q, coupling);
    }
    for (int i = 0; i < ns; ++i) {
      if (chain.omega_m_ref != 0.0) t.emplace_back(1 + nq + i, 1 + nq + i, chain.omega_m_ref);
      for (int j = 0; j < ns; ++j)
        if (hop(i, j) != 0.0) t.emplace_back(1 + nq + i, 1 + nq + j, hop(i, j));
    }
    SpMat h(dim, dim);
    h.setFromTriplets(t.begin(), t.end());
    return OperatorMatrix(h);
  }

  require(space.dimension() <= 1L << 16, "build_array_hamiltonian: full space too large");
  const auto dims = space.factor_dims();
  std::vector<SpMat> b(ns);
  for (int i = 0; i < ns; ++i) b[i] = embed(annihilation(dims[nq + i]), nq + i, dims);
  const long dim = space.dimension();
  SpMat h(dim, dim);
  for (int q = 0; q < nq; ++q) {
    const SpMat sp = embed(sigma_plus(), q, dims);
    const SpMat sm = embed(sigma_minus(), q, dims);
    h += delta_q * SpMat(sp * sm);
    const SpMat& bs = b[chain.site_index(placements[q])];
    h += coupling * SpMat(bs * sp + SpMat(bs.adjoint()) * sm);
  }
  for (int i = 0; i < ns; ++i) {
    const SpMat bdi = b[i].adjoint();
    if (chain.omega_m_ref != 0.0) h += chain.omega_m_ref * SpMat(bdi * b[i]);
    for (int j = 0; j < ns; ++j)
      if (hop(i, j) != 0.0) h += hop(i, j) * SpMat(bdi * b[j]);
  }
  return OperatorMatrix(h);
}

OperatorMatrix excitation_number(const SSHChain& chain, int n_qubits, const SpaceSpec& space) {
  const int ns = chain.n_sites();
  if (space.restriction == Restriction::SingleExcitation) {
    const int dim = 1 + n_qubits + ns;
    SpMat n(dim, dim);
    for (int i = 1; i < dim; ++i) n.insert(i, i) = 1.0;
    return OperatorMatrix(n);
  }
  const auto dims = space.factor_dims();
  SpMat n(space.dimension(), space.dimension());
  for (int q = 0; q < n_qubits; ++q) n += embed(excited_projector(), q, dims);
  for (int i = 0; i < ns; ++i) n += embed(number_op(dims[n_qubits + i]), n_qubits + i, dims);
  return OperatorMatrix(n);
}

OperatorMatrix effective_spin_hamiltonian(const Eigen::MatrixXd& couplings) {
  const int n = static_cast<int>(couplings.rows());
  require(n >= 1 && n <= 12 && couplings.cols() == n,
          "effective_spin_hamiltonian: need a square table for 1..12 qubits");
  const std::vector<int> dims(n, 2);
  SpMat h(1L << n, 1L << n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (couplings(i, j) == 0.0) continue;
      const SpMat hop = embed(sigma_plus(), i, dims) * embed(sigma_minus(), j, dims);
      h -= couplings(i, j) * SpMat(hop + SpMat(hop.adjoint()));
    }
  return OperatorMatrix(h);
}

AmplitudeResult single_excitation_evolve(const DenseMat& h, const DenseVec& psi0,
                                         const std::vector<double>& times, bool check_vacuum) {
  const Eigen::Index dim = h.rows();
  require(dim > 0 && h.cols() == dim && psi0.size() == dim,
          "single_excitation_evolve: dimension mismatch");
  require((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12,
          "single_excitation_evolve: Hamiltonian is not Hermitian");
  if (check_vacuum) {
    for (Eigen::Index i = 1; i < dim; ++i)
      if (std::abs(h(0, i)) > 0.0 || std::abs(h(i, 0)) > 0.0)
        fail(ErrorCode::NotExcitationConserving,
             "single_excitation_evolve: vacuum couples to the one-excitation sector");
    require(std::abs(psi0(0)) == 0.0,
            "single_excitation_evolve: initial state must lie in the one-excitation sector");
  }
  require(std::abs(psi0.norm() - 1.0) < 1e-12, "single_excitation_evolve: psi0 must be normalized");
  Eigen::SelfAdjointEigenSolver<DenseMat> es(h);
  const DenseMat& v = es.eigenvectors();
  const DenseVec c = v.adjoint() * psi0;

  AmplitudeResult res;
  res.times = times;
  res.populations.assign(dim, std::vector<double>(times.size()));
  for (size_t it = 0; it < times.size(); ++it) {
    DenseVec phased(dim);
    for (Eigen::Index k = 0; k < dim; ++k)
      phased(k) = std::exp(cplx(0.0, -es.eigenvalues()(k) * times[it])) * c(k);
    const DenseVec psi = v * phased;
    double norm = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      res.populations[i][it] = std::norm(psi(i));
      norm += res.populations[i][it];
    }
    res.max_norm_error = std::max(res.max_norm_error, std::abs(norm - 1.0));
  }
  if (res.max_norm_error > 1e-10) {
    std::ostringstream msg;
    msg << "single_excitation_evolve: norm drifted by " << res.max_norm_error;
    fail(ErrorCode::TraceDrift, msg.str());
  }
  return res;
}

std::vector<double> linear_grid(double t0, double t1, int n) {
  require(n >= 2, "linear_grid: need at least two points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = t0 + (t1 - t0) * i / (n - 1);
  return g;
}

}  // namespace skyrmech
