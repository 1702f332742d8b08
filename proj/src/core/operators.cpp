#include "core/operators.hpp"

#include <cmath>

#include "core/error.hpp"

namespace skyrmech {

OperatorMatrix::OperatorMatrix(SpMat mat) : m(std::move(mat)) {
  m.makeCompressed();
  hermitian = m.rows() == m.cols() && hermiticity_defect(m) < 1e-12;
}

double hermiticity_defect(const SpMat& m) {
  require(m.rows() == m.cols(), "hermiticity_defect: operator must be square");
  SpMat diff = m - SpMat(m.adjoint());
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SpMat::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

SpMat identity(int n) {
  SpMat id(n, n);
  id.setIdentity();
  return id;
}

SpMat annihilation(int n_max) {
  require(n_max >= 1, "annihilation: truncation must be positive");
  std::vector<Eigen::Triplet<cplx>> t;
  for (int n = 1; n < n_max; ++n) t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  SpMat b(n_max, n_max);
  b.setFromTriplets(t.begin(), t.end());
  return b;
}

SpMat number_op(int n_max) {
  std::vector<Eigen::Triplet<cplx>> t;
  for (int n = 1; n < n_max; ++n) t.emplace_back(n, n, static_cast<double>(n));
  SpMat m(n_max, n_max);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

namespace {

SpMat two_by_two(cplx a, cplx b, cplx c, cplx d) {
  std::vector<Eigen::Triplet<cplx>> t;
  if (a != 0.0) t.emplace_back(0, 0, a);
  if (b != 0.0) t.emplace_back(0, 1, b);
  if (c != 0.0) t.emplace_back(1, 0, c);
  if (d != 0.0) t.emplace_back(1, 1, d);
  SpMat m(2, 2);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

SpMat sigma_minus() { return two_by_two(0.0, 0.0, 1.0, 0.0); }
SpMat sigma_plus() { return two_by_two(0.0, 1.0, 0.0, 0.0); }
SpMat sigma_x() { return two_by_two(0.0, 1.0, 1.0, 0.0); }
SpMat sigma_z() { return two_by_two(1.0, 0.0, 0.0, -1.0); }
SpMat excited_projector() { return two_by_two(1.0, 0.0, 0.0, 0.0); }

SpMat kron(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(static_cast<size_t>(a.nonZeros() * b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SpMat embed(const SpMat& op, int slot, const std::vector<int>& dims) {
  require(slot >= 0 && slot < static_cast<int>(dims.size()), "embed: slot out of range");
  require(op.rows() == dims[slot], "embed: operator does not match factor dimension");
  SpMat out = identity(1);
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    out = kron(out, i == slot ? op : identity(dims[i]));
  return out;
}

SpMat from_dense(const DenseMat& m, double drop) {
  std::vector<Eigen::Triplet<cplx>> t;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > drop) t.emplace_back(i, j, m(i, j));
  SpMat out(m.rows(), m.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

}  // namespace skyrmech
