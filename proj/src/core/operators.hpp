// operators.hpp: sparse complex operators on tensor-product spaces.
//
// Qubit convention throughout: index 0 = |e>, index 1 = |g>, so
// sigma_z = diag(1, -1) and sigma_- |e> = |g>.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

namespace skyrmech {

using cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cplx>;
using DenseMat = Eigen::MatrixXcd;
using DenseVec = Eigen::VectorXcd;

/// Hamiltonian-like operator with a verified hermiticity flag.
struct OperatorMatrix {
  SpMat m;
  bool hermitian = false;

  OperatorMatrix() = default;
  explicit OperatorMatrix(SpMat mat);
  Eigen::Index dim() const { return m.rows(); }
  DenseMat dense() const { return DenseMat(m); }
};

/// max |H - H^dagger| over entries.
double hermiticity_defect(const SpMat& m);

SpMat identity(int n);
SpMat annihilation(int n_max);
SpMat number_op(int n_max);
SpMat sigma_minus();
SpMat sigma_plus();
SpMat sigma_x();
SpMat sigma_z();
SpMat excited_projector();

SpMat kron(const SpMat& a, const SpMat& b);

/// Places `op` on factor `slot` of a product space with factor dimensions
/// `dims`, identities elsewhere.
SpMat embed(const SpMat& op, int slot, const std::vector<int>& dims);

SpMat from_dense(const DenseMat& m, double drop = 0.0);

}  // namespace skyrmech
