#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/dynamics.hpp"
#include "oracles/quantum_oracles.hpp"
#include "support.hpp"

using namespace skyrmech;

namespace {

// Reference Rabi matrix assembled entry by entry on |q, n>, index 0 = e.
DenseMat reference_rabi(double dq, double dm, double lam, int n, bool rwa) {
  DenseMat h = DenseMat::Zero(2 * n, 2 * n);
  auto idx = [n](int q, int k) { return q * n + k; };
  for (int k = 0; k < n; ++k) {
    h(idx(0, k), idx(0, k)) = 0.5 * dq + dm * k;
    h(idx(1, k), idx(1, k)) = -0.5 * dq + dm * k;
    if (k + 1 < n) {
      const double s = lam * std::sqrt(k + 1.0);
      h(idx(1, k + 1), idx(0, k)) = h(idx(0, k), idx(1, k + 1)) = s;  // s- b^dag + h.c.
      if (!rwa) h(idx(0, k + 1), idx(1, k)) = h(idx(1, k), idx(0, k + 1)) = s;
    }
  }
  return h;
}

}  // namespace

TEST_CASE("Rabi Hamiltonian matches an entrywise construction") {
  for (bool rwa : {false, true}) {
    const auto h = build_rabi_hamiltonian(1.3, 0.9, 0.25, 7, rwa);
    CHECK(h.dim() == 14);
    CHECK(h.hermitian);
    CHECK((h.dense() - reference_rabi(1.3, 0.9, 0.25, 7, rwa)).norm() < 1e-13);
  }
  CHECK_CODE(build_rabi_hamiltonian(1.0, 1.0, 0.1, 1), ErrorCode::InvalidArgument);
}

TEST_CASE("resonant JC doublet splits by 2 lambda") {
  const double lam = 0.05;
  const auto h = build_rabi_hamiltonian(1.0, 1.0, lam, 60, true);
  Eigen::SelfAdjointEigenSolver<DenseMat> es(h.dense());
  const auto& e = es.eigenvalues();
  // Ground |g,0> at -1/2, then the one-excitation doublet at 1/2 -/+ lambda.
  CHECK(e(0) == doctest::Approx(-0.5));
  CHECK(e(2) - e(1) == doctest::Approx(2 * lam).epsilon(1e-10));
}

TEST_CASE("two-qubit Hamiltonian couples through sx1 - sx2") {
  const int n = 4;
  const auto h = build_two_qubit_hamiltonian(0.7, 1.1, 0.2, n);
  const std::vector<int> dims{2, 2, n};
  const SpMat b = embed(annihilation(n), 2, dims);
  const SpMat x = embed(sigma_x(), 0, dims) - embed(sigma_x(), 1, dims);
  const SpMat ref = 0.35 * SpMat(embed(sigma_z(), 0, dims) + embed(sigma_z(), 1, dims)) +
                    1.1 * SpMat(SpMat(b.adjoint()) * b) + 0.2 * SpMat(SpMat(b + SpMat(b.adjoint())) * x);
  CHECK((h.dense() - DenseMat(ref)).norm() < 1e-13);
}

TEST_CASE("Schrieffer-Wolff exchange") {
  Warnings w;
  const auto sw = sw_effective_two_qubit(0.1, 1.0, &w);
  CHECK(w.empty());
  CHECK(sw.lambda_ss == doctest::Approx(0.01));
  // |e,g> -> |g,e> completes at pi / (4 Lambda).
  oracle::cvec psi = oracle::cvec::Zero(4);
  psi(1) = 1.0;
  const auto out = oracle::propagate(sw.h_eff, psi, std::acos(-1.0) / (4 * sw.lambda_ss));
  CHECK(std::norm(out(2)) == doctest::Approx(1.0).epsilon(1e-12));
  sw_effective_two_qubit(1.0, 2.0, &w);
  CHECK(w.size() == 1);
  CHECK_CODE(sw_effective_two_qubit(1.0, 0.0), ErrorCode::InvalidArgument);
}

TEST_CASE("single-excitation block equals the full-space block") {
  SSHChain ch;
  ch.n_cells = 3;
  const std::vector<SiteRef> places{{0, Sublattice::B}, {2, Sublattice::A}};
  SpaceSpec single{2, std::vector<int>(6, 2), Restriction::SingleExcitation};
  SpaceSpec full{2, std::vector<int>(6, 2), Restriction::Full};
  CHECK(single.dimension() == 9);
  CHECK(full.dimension() == 256);
  const auto hs = build_array_hamiltonian(ch, places, 0.3, 0.1, single);
  const auto hf = build_array_hamiltonian(ch, places, 0.3, 0.1, full);
  const auto nf = excitation_number(ch, 2, full);
  CHECK((DenseMat(hf.m * nf.m - nf.m * hf.m)).norm() < 1e-13);

  // Map single-excitation basis states into the product space.
  const auto dims = full.factor_dims();
  auto product_index = [&](int excited_factor) {
    long idx = 0;
    for (size_t f = 0; f < dims.size(); ++f) {
      const bool is_qubit = f < 2;
      const int state = static_cast<int>(f) == excited_factor ? (is_qubit ? 0 : 1) : (is_qubit ? 1 : 0);
      idx = idx * dims[f] + state;
    }
    return idx;
  };
  std::vector<long> map{product_index(-1)};
  for (int f = 0; f < 8; ++f) map.push_back(product_index(f));
  const DenseMat dense_f = hf.dense(), dense_s = hs.dense();
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) CHECK(std::abs(dense_f(map[i], map[j]) - dense_s(i, j)) < 1e-13);
}

TEST_CASE("placement collision") {
  SSHChain ch;
  SpaceSpec s{2, std::vector<int>(20, 2), Restriction::SingleExcitation};
  CHECK_CODE(build_array_hamiltonian(ch, {{1, Sublattice::A}, {11, Sublattice::A}}, 0.1, 0.0, s),
             ErrorCode::PlacementCollision);
}

TEST_CASE("effective spin Hamiltonian single-excitation block") {
  Eigen::MatrixXd g(3, 3);
  g << 0, 0.1, -0.2, 0.1, 0, 0.3, -0.2, 0.3, 0;
  const auto h = effective_spin_hamiltonian(g).dense();
  const Eigen::MatrixXd block = effective_exchange_block(g);
  // Single-excitation states: qubit i excited -> all bits 1 except bit i.
  auto idx = [](int i) { return 7 ^ (1 << (2 - i)); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(h(idx(i), idx(j)).real() == doctest::Approx(block(i, j)));
  CHECK_CODE(effective_spin_hamiltonian(Eigen::MatrixXd::Zero(13, 13)), ErrorCode::InvalidArgument);
}

TEST_CASE("amplitude evolution matches dense propagation") {
  SSHChain ch;
  ch.n_cells = 4;
  SpaceSpec s{1, std::vector<int>(8, 2), Restriction::SingleExcitation};
  const auto h = build_array_hamiltonian(ch, {{1, Sublattice::A}}, 0.4, 0.2, s);
  DenseVec psi = DenseVec::Zero(h.dim());
  psi(1) = 1.0;
  const auto times = linear_grid(0.0, 7.0, 8);
  const auto res = single_excitation_evolve(h.dense(), psi, times);
  for (size_t k = 0; k < times.size(); ++k) {
    const auto ref = oracle::propagate(h.dense(), psi, times[k]);
    for (Eigen::Index i = 0; i < ref.size(); ++i)
      CHECK(res.populations[i][k] == doctest::Approx(std::norm(ref(i))).epsilon(1e-10));
  }
  CHECK(res.max_norm_error < 1e-10);
}

TEST_CASE("vacuum coupling is rejected") {
  DenseMat h = DenseMat::Zero(3, 3);
  h(0, 1) = h(1, 0) = 1.0;
  DenseVec psi = DenseVec::Zero(3);
  psi(1) = 1.0;
  CHECK_CODE(single_excitation_evolve(h, psi, {0.0, 1.0}), ErrorCode::NotExcitationConserving);
  CHECK_NOTHROW(single_excitation_evolve(h, psi, {0.0, 1.0}, false));
}

TEST_CASE("linear grid") {
  const auto g = linear_grid(1.0, 3.0, 5);
  CHECK(g.size() == 5);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 3.0);
  CHECK(g[1] == doctest::Approx(1.5));
}
