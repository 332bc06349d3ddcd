#include "fixcirc/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>

using fixcirc::adaptive_simpson;

namespace {

TEST(AdaptiveSimpson, PolynomialsAreExactToTolerance) {
  for (double s : {0.1, 1.0, 3.0, 10.0, 100.0}) {
    EXPECT_NEAR(adaptive_simpson([](double) { return 1.0; }, 0.0, s, 1e-9), s,
                1e-8);
    EXPECT_NEAR(adaptive_simpson([](double t) { return 2.0 * t; }, 0.0, s, 1e-9),
                s * s, 1e-8);
  }
}

TEST(AdaptiveSimpson, SmoothIntegrand) {
  const double got =
      adaptive_simpson([](double t) { return std::exp(-t); }, 0.0, 5.0, 1e-10);
  EXPECT_NEAR(got, 1.0 - std::exp(-5.0), 1e-9);
}

TEST(AdaptiveSimpson, PiecewiseLinearKink) {
  // integral of |t-1| over [0,2] = 1
  const double got = adaptive_simpson(
      [](double t) { return std::abs(t - 1.0); }, 0.0, 2.0, 1e-10);
  EXPECT_NEAR(got, 1.0, 1e-8);
}

TEST(AdaptiveSimpson, EmptyInterval) {
  EXPECT_EQ(adaptive_simpson([](double) { return 7.0; }, 2.0, 2.0, 1e-9), 0.0);
}

}  // namespace
