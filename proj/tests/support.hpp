// Shared test helpers.

#pragma once

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace testing {

template <class F>
skyrmech::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const skyrmech::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a skyrmech::Error");
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testing

#define CHECK_CODE(expr, expected) CHECK(testing::code_of([&] { (void)(expr); }) == (expected))
