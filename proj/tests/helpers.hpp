#pragma once

#include <cmath>
#include <doctest.h>

namespace testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool rel_near(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-300);
}

}  // namespace testing

#define CHECK_NEAR(a, b, tol)                                        \
  do {                                                               \
    const double a_ = (a), b_ = (b);                                 \
    INFO(#a " = ", a_, ", expected ", b_, " within ", (tol));        \
    CHECK(testing::near(a_, b_, (tol)));                             \
  } while (0)

#define CHECK_REL(a, b, tol)                                         \
  do {                                                               \
    const double a_ = (a), b_ = (b);                                 \
    INFO(#a " = ", a_, ", expected ", b_, " within rel ", (tol));    \
    CHECK(testing::rel_near(a_, b_, (tol)));                         \
  } while (0)
