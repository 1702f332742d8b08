#include "core/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace skyrmech::quadrature {

Result adaptive(const std::function<double(double)>& f, double a, double b,
                const Options& opts) {
  using boost::math::quadrature::gauss_kronrod;
  Result r;
  if (a == b) return r;
  // Boost compares an unscaled subinterval error against a scaled tolerance,
  // so integrate over the unit interval and rescale afterwards.
  const double width = b - a;
  auto unit = [&](double t) { return f(a + width * t); };
  r.value = gauss_kronrod<double, 15>::integrate(unit, 0.0, 1.0, opts.max_depth, opts.rel_tol,
                                                 &r.error, &r.l1);
  r.value *= width;
  r.error *= std::abs(width);
  r.l1 *= std::abs(width);
  const double bound = std::max(opts.rel_tol * r.l1, opts.abs_floor);
  if (!std::isfinite(r.value) || r.error > bound) {
    std::ostringstream msg;
    msg << "adaptive quadrature on [" << a << ", " << b << "] stalled: error estimate "
        << r.error << " exceeds " << bound;
    fail(ErrorCode::NonConvergedQuadrature, msg.str());
  }
  return r;
}

}  // namespace skyrmech::quadrature
