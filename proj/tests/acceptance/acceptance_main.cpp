// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. A criterion that overruns its runtime budget fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/device.hpp"
#include "core/dynamics.hpp"
#include "core/qubit_spectrum.hpp"
#include "core/scenarios.hpp"
#include "core/tip_field.hpp"
#include "core/topo_bath.hpp"
#include "core/units.hpp"
#include "oracles/chain_oracles.hpp"
#include "oracles/field_oracles.hpp"
#include "oracles/quantum_oracles.hpp"

using namespace skyrmech;

namespace {

const double kPi = std::acos(-1.0);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) pass = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << what << (cond ? "" : " [violated]");
  }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> body;
};

// ------------------------------------------------------------------ 1-5

void cantilever_frequency_check(Outcome& o) {
  const double f = cantilever_frequency(CantileverGeometry{});
  o.expect(rel(f, 9.7e6) < 0.05, "f_m = " + fmt(f * 1e-6) + " MHz vs 9.7 MHz within 5%");
}

void tip_gradient_check(Outcome& o) {
  const TipGeometry tip;
  const double z = 20e-9;
  const double g = gradient_on_axis(tip, z);
  o.expect(rel(std::abs(g), 1.74e7) < 0.1, "|G(20 nm)| = " + fmt(std::abs(g)) + " T/m vs 1.74e7");
  const double fd =
      oracle::central_difference([&](double x) { return bz_on_axis(tip, x); }, z, 1e-10);
  o.expect(rel(g, fd) < 1e-6, "analytic vs finite difference rel " + fmt(rel(g, fd)));
}

void coupling_budget_check(Outcome& o) {
  const Config cfg;
  const auto tip = coupling_budget(cfg, MassConvention::TipModal);
  const double l = units::angular_to_mhz(tip.lambda);
  const double ratio = l / 3.56;
  o.expect(ratio > 0.5 && ratio < 2.0,
           "lambda/2pi = " + fmt(l) + " MHz, ratio to 3.56 MHz = " + fmt(ratio));
  const auto geo = coupling_budget(cfg, MassConvention::Geometric);
  o.detail << " (geometric-mass convention: " << fmt(units::angular_to_mhz(geo.lambda))
           << " MHz, ratio " << fmt(units::angular_to_mhz(geo.lambda) / 3.56) << ")";
  const double c = cooperativity(3.56, 0.1, 1.0);
  o.expect(std::lround(c) == 507, "C(3.56, 0.1, 1) = " + fmt(c));
}

void hopping_check(Outcome& o) {
  const auto b = coupling_budget(Config{}, MassConvention::TipModal);
  const double ratio = b.hop_g_10v / b.hop_g_1v;
  o.expect(std::abs(ratio - 100.0) <= 4 * 100.0 * 2.220446e-16,
           "g(10 V)/g(1 V) - 100 = " + fmt(ratio - 100.0));
  const double g1 = units::angular_to_mhz(b.hop_g_1v);
  o.expect(g1 / 0.12 < 5.0 && g1 / 0.12 > 0.2, "g(1 V)/2pi = " + fmt(g1) + " MHz vs 0.12 MHz");
}

void squeeze_check(Outcome& o) {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> dm(-100.0, 100.0), x(-0.999, 0.999);
  double worst_t = 0.0, worst_l = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double d = dm(rng), w = x(rng) * d;
    const auto f = squeeze_frame(d, w, 2.5);
    worst_t = std::max(worst_t, rel(std::tanh(2 * f.r) * d, w));
    worst_l = std::max(worst_l, rel(f.lambda_eff, 1.25 * std::exp(f.r)));
  }
  o.expect(worst_t < 1e-12, "max rel tanh identity " + fmt(worst_t));
  o.expect(worst_l < 1e-12, "max rel lambda_eff identity " + fmt(worst_l));
  int raised = 0;
  for (double w : {1.0, -1.0, 1.5, -7.0}) {
    try {
      squeeze_frame(1.0, w, 1.0);
    } catch (const Error& e) {
      raised += e.code() == ErrorCode::SqueezeDiverges;
    }
  }
  o.expect(raised == 4, "SqueezeDiverges at |Omega_E| >= |Delta_m| (" + std::to_string(raised) +
                            "/4)");
}

// ------------------------------------------------------------------ 6-8

DenseVec basis(long dim, long i) {
  DenseVec v = DenseVec::Zero(dim);
  v(i) = 1.0;
  return v;
}

void jc_oracle_check(Outcome& o) {
  const double dm = 20.0;  // Delta_m in units of lambda_bar
  const auto f = squeeze_frame_from_r(dm, 0.0, 1.0);
  const int n = 10;
  LindbladSpec spec{build_rabi_hamiltonian(f.delta_m_eff, f.delta_m_eff, f.lambda_eff, n, true), {}};
  const double t_end = 3.0 * kPi / f.lambda_eff;
  const auto t = linear_grid(0.0, t_end, 601);
  const auto res = lindblad_evolve(spec, pure_state(basis(2 * n, 0)), t,
                                   {{"p_e", embed(excited_projector(), 0, {2, n})}});
  double worst = 0.0;
  for (size_t i = 0; i < t.size(); ++i)
    worst = std::max(worst,
                     std::abs(res.trace("p_e")[i] - oracle::jc_excited_population(f.lambda_eff, t[i])));
  o.expect(worst < 1e-6, "max |P_e - cos^2(lambda t)| = " + fmt(worst) + " over 3 periods");
}

std::vector<double> rabi_phonon_trace(int n_max, double r) {
  const auto f = squeeze_frame_from_r(20.0, r, 1.0);
  LindbladSpec spec{
      build_rabi_hamiltonian(f.delta_m_eff, f.delta_m_eff, f.lambda_eff, n_max, false), {}};
  const auto res = lindblad_evolve(spec, pure_state(basis(2 * n_max, 0)), linear_grid(0, 20, 401),
                                   {{"n", embed(number_op(n_max), 1, {2, n_max})}});
  return res.trace("n");
}

void dsc_check(Outcome& o) {
  const auto a = rabi_phonon_trace(40, 1.5);
  const auto b = rabi_phonon_trace(50, 1.5);
  double peak = 0.0, diff = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    peak = std::max(peak, a[i]);
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  o.expect(peak > 1.0, "max_t <n> = " + fmt(peak));
  o.expect(diff < 1e-4, "n_max 40 vs 50 max trace difference " + fmt(diff));
}

struct TwoQubitRun {
  std::vector<double> t, p_e1;
};

TwoQubitRun two_qubit(double r, double t_max, int points, bool dissipative) {
  const double lam = squeeze_frame_from_r(1.0, r, 1.0).lambda_eff;
  const int n = 6;
  const std::vector<int> dims{2, 2, n};
  LindbladSpec spec{build_two_qubit_hamiltonian(0.0, 10.0 * lam, lam, n), {}};
  if (dissipative) {
    spec.collapse_ops = {{embed(annihilation(n), 2, dims), 0.1},
                         {embed(sigma_minus(), 0, dims), 0.5},
                         {embed(sigma_minus(), 1, dims), 0.5},
                         {embed(sigma_z(), 0, dims), 0.5},
                         {embed(sigma_z(), 1, dims), 0.5}};
  }
  // |g, e, 0>: qubit index 2 q1 + q2 with 0 = e.
  const auto t = linear_grid(0.0, t_max, points);
  const auto res = lindblad_evolve(spec, pure_state(basis(4 * n, 2 * n)), t,
                                   {{"p_e1", embed(excited_projector(), 0, dims)}});
  return {t, res.trace("p_e1")};
}

void sw_check(Outcome& o) {
  const double lam = 0.5;
  const double big_lambda = sw_effective_two_qubit(lam, 10.0 * lam).lambda_ss;
  const double predicted = kPi / (4.0 * big_lambda);
  const auto run = two_qubit(0.0, 1.5 * predicted, 3001, false);
  size_t best = 0;
  for (size_t i = 0; i < run.t.size(); ++i)
    if (run.p_e1[i] > run.p_e1[best]) best = i;
  o.expect(rel(run.t[best], predicted) < 0.1, "transfer at t = " + fmt(run.t[best]) +
                                                  " vs pi/(4 Lambda) = " + fmt(predicted) +
                                                  " (P_e1 = " + fmt(run.p_e1[best]) + ")");
  const auto hi = two_qubit(4.0, 5.0, 401, true);
  const auto lo = two_qubit(0.0, 5.0, 401, true);
  double peak_hi = 0.0, peak_lo = 0.0;
  for (double v : hi.p_e1) peak_hi = std::max(peak_hi, v);
  for (double v : lo.p_e1) peak_lo = std::max(peak_lo, v);
  o.expect(peak_hi > 0.5, "dissipative r = 4 peak P_e1 = " + fmt(peak_hi));
  o.expect(peak_lo < 0.1, "dissipative r = 0 peak P_e1 = " + fmt(peak_lo));
}

// ------------------------------------------------------------------ 9-12

SSHChain ssh(double delta, int cells) {
  SSHChain c;
  c.n_cells = cells;
  c.dimerization = delta;
  return c;
}

void dispersion_check(Outcome& o) {
  for (double d : {0.25, -0.9, 0.1}) {
    const auto c = ssh(d, 10);
    double lo = 1e300;
    for (int i = 0; i < 10000; ++i) lo = std::min(lo, dispersion(c, 2 * kPi * i / 10000).first);
    o.expect(rel(lo, 2 * std::abs(d)) < 1e-9,
             "delta " + fmt(d) + ": min Omega+ rel error " + fmt(rel(lo, 2 * std::abs(d))));
    o.expect(dispersion(c, 0.0).first == 2.0, "Omega+(0) = " + fmt(dispersion(c, 0.0).first));
  }
}

int ring_site(int cells, int cell, Sublattice s) {
  const int w = ((cell % cells) + cells) % cells;
  return 2 * w + (s == Sublattice::B ? 1 : 0);
}

void bound_state_check(Outcome& o) {
  const auto c = ssh(0.25, 10);
  const double g = 0.4;
  for (auto attach : {Sublattice::A, Sublattice::B}) {
    const auto q = bound_state_quadrature(c, g, 0.0, attach, -15, 15);
    const auto cf = bound_state_closed_form(c, g, attach, -15, 15);
    const auto zm = oracle::qubit_ring_zero_mode(40, c.g1(), c.g2(), g, ring_site(40, 0, attach));
    double d_cf = std::abs(q.qubit_amplitude - cf.qubit_amplitude);
    double d_ring = std::abs(q.qubit_amplitude.real() - zm(0));
    double forbidden = 0.0;
    for (size_t i = 0; i < q.cells.size(); ++i) {
      const int j = q.cells[i];
      d_cf = std::max({d_cf, std::abs(q.amp_a[i] - cf.amp_a[i]), std::abs(q.amp_b[i] - cf.amp_b[i])});
      d_ring = std::max({d_ring, std::abs(q.amp_a[i].real() - zm(1 + ring_site(40, j, Sublattice::A))),
                         std::abs(q.amp_b[i].real() - zm(1 + ring_site(40, j, Sublattice::B)))});
      const bool wrong_side = attach == Sublattice::A ? j < 0 : j > 0;
      if (wrong_side) forbidden += q.weight(i);
    }
    const std::string tag = attach == Sublattice::A ? "A: " : "B: ";
    o.expect(d_cf < 1e-6, tag + "quadrature vs closed form " + fmt(d_cf));
    o.expect(d_ring < 1e-3, tag + "vs N = 40 zero mode " + fmt(d_ring));
    o.expect(forbidden < 1e-8, tag + "forbidden-side weight " + fmt(forbidden));
  }
}

void chirality_check(Outcome& o) {
  const Config cfg;
  auto base = ssh(cfg.number("ssh.delta"), static_cast<int>(cfg.integer("fig7.ring_cells")));
  const double g0 = cfg.number("ssh.coupling_over_g");
  for (double e : {1.1, -1.1}) {
    double chi[2];
    const double rs[2] = {0.0, 2.0};
    for (int k = 0; k < 2; ++k) {
      const auto ch = squeezed_chain(base, rs[k]);
      chi[k] = std::abs(bound_state_ring(ch, g0 * std::exp(rs[k]), e, Sublattice::A).chirality);
    }
    o.expect(chi[1] > chi[0],
             "E = " + fmt(e) + " G: |chirality| r=0 " + fmt(chi[0]) + ", r=2 " + fmt(chi[1]));
  }
}

struct NetworkPattern {
  int decoupled = -1;
  int partner = -1;
  double max_dev_decoupled = 0.0;
  double exchange_rate = 0.0;
  double predicted = 0.0;
};

NetworkPattern network(char which, double delta) {
  auto c = ssh(delta, 10);
  const std::vector<SiteRef> places =
      which == 'a' ? std::vector<SiteRef>{{2, Sublattice::B}, {3, Sublattice::A}, {4, Sublattice::B}}
                   : std::vector<SiteRef>{{2, Sublattice::A}, {3, Sublattice::B}, {4, Sublattice::A}};
  const double g = 0.1;
  const auto table = effective_coupling_matrix(c, g, places);
  NetworkPattern p;
  for (int i = 0; i < 3; ++i)
    if (table.row(i).cwiseAbs().maxCoeff() == 0.0) p.decoupled = i;
  for (int j = 0; j < 3; ++j)
    if (j != 1 && table(1, j) != 0.0) p.partner = j;
  if (p.partner < 0) return p;
  p.predicted = 2.0 * std::abs(table(1, p.partner));

  SpaceSpec space{3, std::vector<int>(c.n_sites(), 2), Restriction::SingleExcitation};
  const auto h = build_array_hamiltonian(c, places, g, 0.0, space);
  const auto t = linear_grid(0.0, 1500.0, 15001);
  const auto res = single_excitation_evolve(h.dense(), basis(h.dim(), 2), t);
  if (p.decoupled >= 0) {
    const auto& pd = res.populations[1 + p.decoupled];
    for (double v : pd) p.max_dev_decoupled = std::max(p.max_dev_decoupled, std::abs(v - pd[0]));
  }
  // sin^2(|G| t) first reaches one half at a quarter of the exchange period.
  const auto& pp = res.populations[1 + p.partner];
  for (size_t i = 1; i < t.size(); ++i) {
    if (pp[i] >= 0.5) {
      const double t_half = t[i - 1] + (0.5 - pp[i - 1]) / (pp[i] - pp[i - 1]) * (t[i] - t[i - 1]);
      p.exchange_rate = kPi / (2.0 * t_half);
      break;
    }
  }
  return p;
}

void network_check(Outcome& o) {
  for (char which : {'a', 'b'}) {
    const auto pos = network(which, 0.25);
    const auto neg = network(which, -0.9);
    for (const auto* p : {&pos, &neg}) {
      const std::string tag = std::string("case ") + which + (p == &pos ? " delta 0.25" : " delta -0.9");
      o.expect(p->decoupled >= 0 && p->max_dev_decoupled < 0.05,
               tag + ": Sky" + std::to_string(p->decoupled + 1) + " deviation " +
                   fmt(p->max_dev_decoupled));
      o.expect(p->predicted > 0 && rel(p->exchange_rate, p->predicted) < 0.1,
               tag + ": exchange " + fmt(p->exchange_rate) + " vs 2|G_ij| " + fmt(p->predicted));
    }
    o.expect(pos.decoupled != neg.decoupled && pos.decoupled == neg.partner,
             std::string("case ") + which + ": flip exchanges the decoupled qubit (Sky" +
                 std::to_string(pos.decoupled + 1) + " -> Sky" + std::to_string(neg.decoupled + 1) +
                 ")");
  }
}

// ------------------------------------------------------------------ 13

void qubit_spectrum_check(Outcome& o) {
  const SkyrmionMaterial m;
  const double kappa = m.anisotropy_k_mev * units::mev * m.spin_sbar / units::hbar;
  const QubitCoefficients c{kappa, kappa, 0.1 * kappa};
  const auto s = diagonalize_qubit(c, 12);  // throws TruncationNotConverged otherwise
  const auto q = two_level_reduction(c);
  const double dev = rel(q.omega_q, s.omega_q);
  o.expect(dev < 0.01, "two-level vs full omega_q deviation " + fmt(dev));
  o.expect(true, "s_max 12 -> 17 convergence invariant held");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cantilever frequency", 1e-3, cantilever_frequency_check},
      {2, "tip gradient", 1.0, tip_gradient_check},
      {3, "coupling budget", 1e-3, coupling_budget_check},
      {4, "hopping scaling", 1e-3, hopping_check},
      {5, "squeeze identities", 10e-3, squeeze_check},
      {6, "JC Rabi oracle", 5.0, jc_oracle_check},
      {7, "USC/DSC phonon number", 60.0, dsc_check},
      {8, "Schrieffer-Wolff transfer", 120.0, sw_check},
      {9, "dispersion and gap", 0.1, dispersion_check},
      {10, "bound-state triple agreement", 10.0, bound_state_check},
      {11, "chirality restoration", 10.0, chirality_check},
      {12, "chiral network dynamics", 60.0, network_check},
      {13, "qubit spectrum", 0.1, qubit_spectrum_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << (o.detail.tellp() > 0 ? "; " : "") << "exception: " << e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s %2d %s: %s; runtime %.3g s (budget %.3g s%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name, o.detail.str().c_str(), dt, c.budget_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
