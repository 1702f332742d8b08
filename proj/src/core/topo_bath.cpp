#include "core/topo_bath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/units.hpp"

namespace skyrmech {

using units::pi;
using cplx = std::complex<double>;

const char* to_string(Sublattice s) { return s == Sublattice::A ? "A" : "B"; }

void SSHChain::validate() const {
  require(n_cells >= 1, "ssh chain: need at least one cell");
  require(hop_g > 0.0 && std::isfinite(hop_g), "ssh chain: G must be positive");
  require(std::abs(dimerization) < 1.0, "ssh chain: |delta| must be < 1");
}

int SSHChain::site_index(SiteRef site) const {
  int cell = site.cell;
  if (boundary == Boundary::Periodic) {
    cell = ((cell % n_cells) + n_cells) % n_cells;
  } else if (cell < 0 || cell >= n_cells) {
    std::ostringstream msg;
    msg << "ssh chain: cell " << cell << " outside open chain of " << n_cells << " cells";
    fail(ErrorCode::InvalidArgument, msg.str());
  }
  return 2 * cell + (site.sub == Sublattice::B ? 1 : 0);
}

Eigen::MatrixXd SSHChain::hopping_matrix() const {
  validate();
  const int n = n_sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int c = 0; c < n_cells; ++c) {
    const int a = 2 * c, b = 2 * c + 1;
    h(a, b) += g1();
    h(b, a) += g1();
    if (c + 1 < n_cells || (boundary == Boundary::Periodic && n_cells > 1)) {
      const int next = 2 * ((c + 1) % n_cells);
      h(b, next) += g2();
      h(next, b) += g2();
    } else if (boundary == Boundary::Periodic && n_cells == 1) {
      h(b, a) += g2();
      h(a, b) += g2();
    }
  }
  return h;
}

namespace {

double omega_sq(const SSHChain& chain, double k) {
  const double d = chain.dimerization;
  return chain.hop_g * chain.hop_g * (2.0 * (1.0 + d * d) + 2.0 * (1.0 - d * d) * std::cos(k));
}

cplx bloch_f(const SSHChain& chain, double k) {
  return chain.g1() + chain.g2() * std::exp(cplx(0.0, -k));
}

}  // namespace

std::pair<double, double> dispersion(const SSHChain& chain, double k) {
  chain.validate();
  const double w = std::sqrt(std::max(0.0, omega_sq(chain, k)));
  return {w, -w};
}

double band_gap(const SSHChain& chain) {
  chain.validate();
  return 4.0 * chain.hop_g * std::abs(chain.dimerization);
}

double bloch_phase(const SSHChain& chain, double k) {
  chain.validate();
  return std::arg(bloch_f(chain, k));
}

std::vector<double> bloch_phase_sweep(const SSHChain& chain, const std::vector<double>& ks) {
  std::vector<double> out;
  out.reserve(ks.size());
  for (size_t i = 0; i < ks.size(); ++i) {
    double phi = bloch_phase(chain, ks[i]);
    if (i > 0) {
      while (phi - out.back() > pi) phi -= 2.0 * pi;
      while (phi - out.back() < -pi) phi += 2.0 * pi;
    }
    out.push_back(phi);
  }
  return out;
}

double BoundState::stored_norm() const {
  double s = std::norm(qubit_amplitude);
  for (size_t i = 0; i < cells.size(); ++i) s += weight(i);
  return s;
}

double chirality(const std::vector<int>& cells, const std::vector<double>& weights,
                 int attach_cell) {
  require(cells.size() == weights.size(), "chirality: size mismatch");
  double right = 0.0, left = 0.0;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] > attach_cell) right += weights[i];
    if (cells[i] < attach_cell) left += weights[i];
  }
  const double total = right + left;
  return total > 0.0 ? (right - left) / total : 0.0;
}

namespace {

// Amplitudes in k space relative to C_e = 1 for attachment on `attach`.
struct KAmplitudes {
  cplx a, b;
};

KAmplitudes k_amplitudes(const SSHChain& chain, double coupling, double e, Sublattice attach,
                         double k) {
  const double denom = e * e - omega_sq(chain, k);
  const cplx f = bloch_f(chain, k);
  if (attach == Sublattice::A) return {coupling * e / denom, coupling * std::conj(f) / denom};
  return {coupling * f / denom, coupling * e / denom};
}

// Fourier synthesis over a uniform k grid of n points (k_m = 2 pi m / n - pi
// for the infinite chain, 2 pi m / n for the ring; both are the same set
// modulo 2 pi when n is even, and the integrand is 2 pi periodic).
BoundState synthesize(const SSHChain& chain, double coupling, double e, Sublattice attach,
                      int n_k, const std::vector<int>& cells) {
  std::vector<KAmplitudes> amps(n_k);
  double norm_sites = 0.0;
  for (int m = 0; m < n_k; ++m) {
    const double k = 2.0 * pi * m / n_k;
    amps[m] = k_amplitudes(chain, coupling, e, attach, k);
    norm_sites += std::norm(amps[m].a) + std::norm(amps[m].b);
  }
  norm_sites /= n_k;

  BoundState bs;
  bs.energy = e;
  bs.attach = {0, attach};
  bs.cells = cells;
  for (int j : cells) {
    cplx a = 0.0, b = 0.0;
    for (int m = 0; m < n_k; ++m) {
      const cplx phase = std::exp(cplx(0.0, 2.0 * pi * m / n_k * j));
      a += phase * amps[m].a;
      b += phase * amps[m].b;
    }
    bs.amp_a.push_back(a / static_cast<double>(n_k));
    bs.amp_b.push_back(b / static_cast<double>(n_k));
  }
  const double scale = 1.0 / std::sqrt(1.0 + norm_sites);
  bs.qubit_amplitude = scale;
  for (auto& a : bs.amp_a) a *= scale;
  for (auto& b : bs.amp_b) b *= scale;
  std::vector<double> w(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) w[i] = bs.weight(i);
  bs.chirality = chirality(cells, w, 0);
  return bs;
}

std::vector<int> cell_range(int j_min, int j_max) {
  require(j_min <= j_max, "bound state: empty cell range");
  std::vector<int> cells;
  for (int j = j_min; j <= j_max; ++j) cells.push_back(j);
  return cells;
}

void check_in_gap(const SSHChain& chain, double e, double guard) {
  const double edge = 2.0 * chain.hop_g * std::abs(chain.dimerization);
  if (!(std::abs(e) < guard * edge)) {
    std::ostringstream msg;
    msg << "bound state: |E| = " << std::abs(e) << " not below " << guard
        << " of the gap edge 2G|delta| = " << edge;
    fail(ErrorCode::EnergyInBand, msg.str());
  }
}

}  // namespace

BoundState bound_state_quadrature(const SSHChain& chain, double coupling, double e_bs,
                                  Sublattice attach, int j_min, int j_max,
                                  const QuadratureOptions& options) {
  chain.validate();
  require(options.n_k >= 16 && options.n_k % 2 == 0, "bound state: n_k must be even and >= 16");
  check_in_gap(chain, e_bs, options.gap_guard);
  return synthesize(chain, coupling, e_bs, attach, options.n_k, cell_range(j_min, j_max));
}

BoundState bound_state_closed_form(const SSHChain& chain, double coupling, Sublattice attach,
                                   int j_min, int j_max) {
  chain.validate();
  const double d = chain.dimerization;
  require(d != 0.0, "bound_state_closed_form: delta = 0 has no gap");
  // Geometric decay of ratio q = -(smaller hop)/(larger hop) starting at
  // -coupling/(larger hop); the side is fixed by sign(delta) and sublattice.
  const double big = d > 0.0 ? chain.g1() : chain.g2();
  const double q = -(d > 0.0 ? chain.g2() / chain.g1() : chain.g1() / chain.g2());
  const double c0 = -coupling / big;

  BoundState bs;
  bs.energy = 0.0;
  bs.attach = {0, attach};
  bs.cells = cell_range(j_min, j_max);
  // Cell offset of the first non-zero amplitude and direction of decay.
  int start = 0, dir = 1;
  if (attach == Sublattice::A) {
    start = d > 0.0 ? 0 : -1;
    dir = d > 0.0 ? 1 : -1;
  } else {
    start = d > 0.0 ? 0 : 1;
    dir = d > 0.0 ? -1 : 1;
  }
  for (int j : bs.cells) {
    const int y = (j - start) * dir;
    const cplx amp = y >= 0 ? c0 * std::pow(q, y) : 0.0;
    bs.amp_a.push_back(attach == Sublattice::A ? 0.0 : amp);
    bs.amp_b.push_back(attach == Sublattice::A ? amp : 0.0);
  }
  const double sites = c0 * c0 / (1.0 - q * q);
  const double scale = 1.0 / std::sqrt(1.0 + sites);
  bs.qubit_amplitude = scale;
  for (auto& a : bs.amp_a) a *= scale;
  for (auto& b : bs.amp_b) b *= scale;
  std::vector<double> w(bs.cells.size());
  for (size_t i = 0; i < bs.cells.size(); ++i) w[i] = bs.weight(i);
  bs.chirality = chirality(bs.cells, w, 0);
  return bs;
}

BoundState bound_state_ring(const SSHChain& chain, double coupling, double e, Sublattice attach) {
  chain.validate();
  require(chain.boundary == Boundary::Periodic, "bound_state_ring: chain must be periodic");
  const int n = chain.n_cells;
  for (int m = 0; m < n; ++m) {
    const double gap = std::abs(e * e - omega_sq(chain, 2.0 * pi * m / n));
    if (gap < 1e-12 * std::max(1.0, e * e)) {
      std::ostringstream msg;
      msg << "bound_state_ring: E = " << e << " coincides with a ring level";
      fail(ErrorCode::EnergyInBand, msg.str());
    }
  }
  return synthesize(chain, coupling, e, attach, n, cell_range(-(n / 2), n - n / 2 - 1));
}

double bound_state_detuning(const SSHChain& chain, double coupling, double e, Sublattice attach,
                            const QuadratureOptions& options) {
  const auto bs = bound_state_quadrature(chain, coupling, e, attach, 0, 0, options);
  const cplx onsite = attach == Sublattice::A ? bs.amp_a[0] : bs.amp_b[0];
  return e - (coupling * onsite / bs.qubit_amplitude).real();
}

VacancyState vacancy_edge_state(const SSHChain& chain, SiteRef vacancy) {
  require(chain.boundary == Boundary::Open, "vacancy_edge_state: chain must be open");
  const Eigen::MatrixXd full = chain.hopping_matrix();
  const int removed = chain.site_index(vacancy);
  const int n = chain.n_sites() - 1;
  std::vector<int> keep;
  VacancyState out;
  for (int s = 0; s < chain.n_sites(); ++s) {
    if (s == removed) continue;
    keep.push_back(s);
    out.sites.push_back({s / 2, s % 2 == 0 ? Sublattice::A : Sublattice::B});
  }
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = full(keep[i], keep[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::Index best = 0;
  es.eigenvalues().cwiseAbs().minCoeff(&best);
  out.energy = es.eigenvalues()(best);
  out.amplitudes = es.eigenvectors().col(best);
  out.participation_ratio = 1.0 / out.amplitudes.array().pow(4).sum();
  return out;
}

double effective_coupling(const SSHChain& chain, double coupling, SiteRef place_i,
                          SiteRef place_j) {
  chain.validate();
  if (place_i.sub == place_j.sub) return 0.0;
  const double d = chain.dimerization;
  require(d != 0.0, "effective_coupling: delta = 0 is gapless, no Markovian exchange");
  const SiteRef a = place_i.sub == Sublattice::A ? place_i : place_j;
  const SiteRef b = place_i.sub == Sublattice::A ? place_j : place_i;
  const double g2 = coupling * coupling;
  if (d > 0.0) {
    const int x = b.cell - a.cell;
    if (x < 0) return 0.0;
    const double sign = x % 2 == 0 ? 1.0 : -1.0;
    return g2 * sign * std::pow((1.0 - d) / (1.0 + d), x) / (chain.hop_g * (1.0 + d));
  }
  const int y = a.cell - 1 - b.cell;
  if (y < 0) return 0.0;
  const double sign = y % 2 == 0 ? 1.0 : -1.0;
  return g2 * sign * std::pow((1.0 + d) / (1.0 - d), y) / (chain.hop_g * (1.0 - d));
}

Eigen::MatrixXd effective_coupling_matrix(const SSHChain& chain, double coupling,
                                          const std::vector<SiteRef>& placements) {
  const int n = static_cast<int>(placements.size());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      g(i, j) = effective_coupling(chain, coupling, placements[i], placements[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

Eigen::MatrixXd effective_exchange_block(const Eigen::MatrixXd& couplings) {
  require(couplings.rows() == couplings.cols(), "effective_exchange_block: square table required");
  Eigen::MatrixXd h = -couplings;
  h.diagonal().setZero();
  return h;
}

SSHChain squeezed_chain(const SSHChain& base, double r) {
  SSHChain c = base;
  c.hop_g = base.hop_g * std::exp(2.0 * r);
  return c;
}

}  // namespace skyrmech
