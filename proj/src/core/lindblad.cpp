#include "core/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace skyrmech {

const std::vector<double>& EvolutionResult::trace(const std::string& name) const {
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return traces[k];
  fail(ErrorCode::InvalidArgument, "EvolutionResult: no trace named " + name);
}

DenseMat pure_state(const DenseVec& psi) { return psi * psi.adjoint(); }

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// Column-major vectorized Liouvillian, vec(A rho B) = (B^T kron A) vec(rho).
struct Generator {
  SpMat h_eff;
  SpMat super;
  Eigen::Index dim = 0;

  void build(const std::vector<std::pair<SpMat, double>>& jumps) {
    const SpMat id = identity(static_cast<int>(dim));
    super = cplx(0.0, -1.0) * kron(id, h_eff) + cplx(0.0, 1.0) * kron(SpMat(h_eff.conjugate()), id);
    for (const auto& [l, gamma] : jumps) super += gamma * kron(SpMat(l.conjugate()), l);
    super.makeCompressed();
  }

  void apply(const DenseMat& rho, DenseMat& out) const {
    out.resize(dim, dim);
    Eigen::Map<DenseVec>(out.data(), dim * dim).noalias() =
        super * Eigen::Map<const DenseVec>(rho.data(), dim * dim);
  }
};

double operator_scale(const SpMat& m) {
  double worst = 0.0;
  Eigen::VectorXd rows = Eigen::VectorXd::Zero(m.rows());
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) rows(it.row()) += std::abs(it.value());
  if (rows.size() > 0) worst = rows.maxCoeff();
  return worst;
}

double expectation(const SpMat& op, const DenseMat& rho) {
  // tr(op rho) = sum_ij op_ij rho_ji
  cplx acc = 0.0;
  for (int k = 0; k < op.outerSize(); ++k)
    for (SpMat::InnerIterator it(op, k); it; ++it) acc += it.value() * rho(it.col(), it.row());
  return acc.real();
}

}  // namespace

EvolutionResult lindblad_evolve(const LindbladSpec& spec, const DenseMat& rho0,
                                const std::vector<double>& time_grid,
                                const std::vector<Observable>& observables,
                                const IntegratorOptions& options) {
  const Eigen::Index dim = spec.hamiltonian.dim();
  require(dim > 0, "lindblad_evolve: empty Hamiltonian");
  require(spec.hamiltonian.hermitian, "lindblad_evolve: Hamiltonian is not Hermitian");
  require(rho0.rows() == dim && rho0.cols() == dim, "lindblad_evolve: rho0 dimension mismatch");
  require(!time_grid.empty(), "lindblad_evolve: empty time grid");
  for (size_t i = 1; i < time_grid.size(); ++i)
    require(time_grid[i] >= time_grid[i - 1], "lindblad_evolve: time grid must be non-decreasing");
  require((rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() < 1e-12,
          "lindblad_evolve: rho0 must be Hermitian");
  require(std::abs(rho0.trace() - cplx(1.0)) < 1e-10, "lindblad_evolve: rho0 must have unit trace");
  {
    Eigen::SelfAdjointEigenSolver<DenseMat> es(rho0, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() > options.eigen_floor,
            "lindblad_evolve: rho0 must be positive semidefinite");
  }
  for (const auto& o : observables)
    require(o.op.rows() == dim && o.op.cols() == dim,
            "lindblad_evolve: observable " + o.name + " has wrong dimension");

  Generator gen;
  gen.dim = dim;
  gen.h_eff = spec.hamiltonian.m;
  std::vector<std::pair<SpMat, double>> jumps;
  for (const auto& c : spec.collapse_ops) {
    require(c.rate >= 0.0, "lindblad_evolve: collapse rates must be non-negative");
    require(c.op.rows() == dim && c.op.cols() == dim,
            "lindblad_evolve: collapse operator has wrong dimension");
    if (c.rate == 0.0) continue;
    SpMat adj = c.op.adjoint();
    gen.h_eff -= cplx(0.0, 0.5 * c.rate) * SpMat(adj * c.op);
    jumps.emplace_back(c.op, c.rate);
  }
  gen.h_eff.makeCompressed();
  gen.build(jumps);

  EvolutionResult res;
  res.times = time_grid;
  for (const auto& o : observables) res.names.push_back(o.name);
  res.names.push_back("energy");
  res.traces.assign(res.names.size(), {});
  res.min_eigenvalue = 1.0;

  const double span = std::max(time_grid.back() - time_grid.front(), 1e-300);
  const double h_floor = options.min_step * span;
  double h = 0.01 / std::max(1.0, operator_scale(gen.h_eff));
  double energy0 = 0.0;

  DenseMat rho = rho0;
  DenseMat k1, k2, k3, k4, k5, k6, k7, tmp, next;
  double t = time_grid.front();
  gen.apply(rho, k1);

  auto record = [&](double t_now, bool first) {
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > options.trace_tolerance) {
      std::ostringstream msg;
      msg << "lindblad_evolve: |tr rho - 1| = " << std::abs(tr - 1.0) << " at t = " << t_now;
      fail(ErrorCode::TraceDrift, msg.str());
    }
    res.trace_of_rho.push_back(tr);
    for (size_t k = 0; k < observables.size(); ++k)
      res.traces[k].push_back(expectation(observables[k].op, rho));
    const double energy = expectation(spec.hamiltonian.m, rho);
    res.traces.back().push_back(energy);
    if (first) energy0 = energy;
    res.max_energy_drift = std::max(
        res.max_energy_drift, std::abs(energy - energy0) / std::max(std::abs(energy0), 1e-300));
    if (options.check_positivity) {
      DenseMat herm = 0.5 * (rho + rho.adjoint());
      Eigen::SelfAdjointEigenSolver<DenseMat> es(herm, Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues().minCoeff();
      res.min_eigenvalue = std::min(res.min_eigenvalue, lo);
      if (lo < options.eigen_floor) {
        std::ostringstream msg;
        msg << "lindblad_evolve: density matrix eigenvalue " << lo << " below floor at t = "
            << t_now;
        fail(ErrorCode::TraceDrift, msg.str());
      }
    }
  };

  record(t, true);
  for (size_t idx = 1; idx < time_grid.size(); ++idx) {
    const double target = time_grid[idx];
    while (t < target) {
      if (res.steps >= options.max_steps)
        fail(ErrorCode::StepSizeUnderflow, "lindblad_evolve: step budget exhausted");
      bool last = false;
      double step = h;
      if (t + step >= target) {
        step = target - t;
        last = true;
      }
      tmp = rho + step * a21 * k1;
      gen.apply(tmp, k2);
      tmp = rho + step * (a31 * k1 + a32 * k2);
      gen.apply(tmp, k3);
      tmp = rho + step * (a41 * k1 + a42 * k2 + a43 * k3);
      gen.apply(tmp, k4);
      tmp = rho + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      gen.apply(tmp, k5);
      tmp = rho + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      gen.apply(tmp, k6);
      next = rho + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      gen.apply(next, k7);
      tmp = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double err = 0.0;
      for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) {
          const double scale =
              options.atol + options.rtol * std::max(std::abs(rho(i, j)), std::abs(next(i, j)));
          err = std::max(err, std::abs(tmp(i, j)) / scale);
        }
      if (err <= 1.0) {
        t = last ? target : t + step;
        rho.swap(next);
        k1.swap(k7);
        ++res.steps;
      }
      if (!std::isfinite(err))
        h = 0.2 * step;
      else if (!last || err > 1.0)
        h = step * (err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0));
      if (h < h_floor) {
        std::ostringstream msg;
        msg << "lindblad_evolve: step size " << h << " fell below " << h_floor << " at t = " << t;
        fail(ErrorCode::StepSizeUnderflow, msg.str());
      }
    }
    record(t, false);
  }
  return res;
}

}  // namespace skyrmech
