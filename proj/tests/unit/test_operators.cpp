#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/operators.hpp"

using namespace skyrmech;

TEST_CASE("ladder operators") {
  const DenseMat a = DenseMat(annihilation(5));
  const DenseMat n = DenseMat(number_op(5));
  CHECK((a.adjoint() * a - n).norm() < 1e-14);
  const DenseMat comm = a * a.adjoint() - a.adjoint() * a;
  for (int k = 0; k < 4; ++k) CHECK(comm(k, k).real() == doctest::Approx(1.0));
  CHECK(comm(4, 4).real() == doctest::Approx(-4.0));  // truncation edge
}

TEST_CASE("qubit operators use index 0 = excited") {
  const DenseMat sz = DenseMat(sigma_z());
  CHECK(sz(0, 0).real() == 1.0);
  CHECK(sz(1, 1).real() == -1.0);
  DenseVec e = DenseVec::Zero(2);
  e(0) = 1.0;
  const DenseVec g = DenseMat(sigma_minus()) * e;
  CHECK(std::abs(g(1)) == doctest::Approx(1.0));
  CHECK((DenseMat(sigma_plus()) - DenseMat(sigma_minus()).adjoint()).norm() == 0.0);
  CHECK((DenseMat(sigma_x()) - DenseMat(sigma_plus() + sigma_minus())).norm() == 0.0);
  CHECK(DenseMat(excited_projector())(0, 0).real() == 1.0);
}

TEST_CASE("kron and embed follow the first-factor-slowest ordering") {
  const SpMat z = sigma_z();
  const SpMat n = number_op(3);
  const DenseMat k = DenseMat(kron(z, n));
  CHECK(k.rows() == 6);
  CHECK(k(4, 4).real() == doctest::Approx(-1.0));  // (g, n=1)
  const std::vector<int> dims{2, 2, 3};
  const DenseMat e1 = DenseMat(embed(n, 2, dims));
  const DenseMat e2 = DenseMat(kron(identity(4), n));
  CHECK((e1 - e2).norm() == 0.0);
  const DenseMat q2 = DenseMat(embed(z, 1, dims));
  CHECK(q2(3, 3).real() == -1.0);  // index 3 = (q1 = e, q2 = g, n = 0)
}

TEST_CASE("hermiticity flag") {
  const OperatorMatrix h(SpMat(sigma_x() + sigma_z()));
  CHECK(h.hermitian);
  const OperatorMatrix nh(sigma_minus());
  CHECK_FALSE(nh.hermitian);
  CHECK(hermiticity_defect(sigma_minus()) == doctest::Approx(1.0));
}

TEST_CASE("from_dense drops small entries") {
  DenseMat d = DenseMat::Zero(2, 2);
  d(0, 1) = 1e-20;
  d(1, 1) = 2.0;
  CHECK(from_dense(d, 1e-15).nonZeros() == 1);
  CHECK(from_dense(d).nonZeros() == 2);
}
