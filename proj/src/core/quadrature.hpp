#pragma once

#include <functional>

namespace skyrmech::quadrature {

struct Options {
  double rel_tol = 1e-9;
  double abs_floor = 0.0;
  unsigned max_depth = 24;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  // Kronrod error estimate
  double l1 = 0.0;     // integral of |f|
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. Throws
/// ErrorCode::NonConvergedQuadrature when the error estimate stays above
/// max(rel_tol * L1, abs_floor).
Result adaptive(const std::function<double(double)>& f, double a, double b,
                const Options& opts = {});

}  // namespace skyrmech::quadrature
