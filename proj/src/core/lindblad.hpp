// lindblad.hpp: adaptive Dormand-Prince 5(4) integration of the Lindblad
// master equation on a dense density matrix with sparse operators.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/operators.hpp"

namespace skyrmech {

struct CollapseChannel {
  SpMat op;
  double rate = 0.0;
};

struct LindbladSpec {
  OperatorMatrix hamiltonian;
  std::vector<CollapseChannel> collapse_ops;
};

struct Observable {
  std::string name;
  SpMat op;
};

struct IntegratorOptions {
  double rtol = 1e-9;
  double atol = 1e-11;
  double min_step = 1e-13;  // relative to the span of the time grid
  long max_steps = 50'000'000;
  double trace_tolerance = 1e-6;
  double eigen_floor = -1e-8;
  bool check_positivity = true;
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<std::string> names;
  std::vector<std::vector<double>> traces;  // traces[k][i] = <names[k]> at times[i]
  std::vector<double> trace_of_rho;
  double min_eigenvalue = 0.0;  // over all output times
  double max_energy_drift = 0.0;  // relative, only meaningful without collapse
  long steps = 0;

  const std::vector<double>& trace(const std::string& name) const;
};

/// rho0 must be Hermitian, unit-trace and positive semidefinite. The time
/// grid must be non-decreasing; output is recorded at each grid point.
EvolutionResult lindblad_evolve(const LindbladSpec& spec, const DenseMat& rho0,
                                const std::vector<double>& time_grid,
                                const std::vector<Observable>& observables,
                                const IntegratorOptions& options = {});

DenseMat pure_state(const DenseVec& psi);

}  // namespace skyrmech
