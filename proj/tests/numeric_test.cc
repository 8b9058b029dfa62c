/*
 * Copyright 2026 The edgeood Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "edge/core/numeric.h"

#include <cmath>

#include "gtest/gtest.h"

namespace edge {
namespace {

// Reference values computed offline at 50 significant digits.
constexpr double kSigmoidMinus2 = 0.11920292202211756;
constexpr double kSoftplus2 = 2.1269280110429725;
constexpr double kSoftplusMinus1 = 0.31326168751822283;
constexpr double kSoftplusMinus50 = 1.9287498479639178e-22;

TEST(Sigmoid, ReferenceValues) {
  EXPECT_NEAR(Sigmoid(-2.0), kSigmoidMinus2, 1e-16);
  EXPECT_NEAR(Sigmoid(2.0), 1.0 - kSigmoidMinus2, 2.3e-16);
  EXPECT_EQ(Sigmoid(0.0), 0.5);
}

TEST(Sigmoid, SaturatesWithoutOverflow) {
  // 1 - 1e-40 is not representable; the closest double is 1 itself.
  const double hi = Sigmoid(100.0);
  EXPECT_LE(hi, 1.0);
  EXPECT_LT(1.0 - hi, 1e-40);
  const double lo = Sigmoid(-100.0);
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(lo, 1e-40);
  EXPECT_EQ(Sigmoid(1000.0), 1.0);
  EXPECT_EQ(Sigmoid(-1000.0), 0.0);
  EXPECT_FALSE(std::isnan(Sigmoid(-1e308)));
}

TEST(Sigmoid, Symmetry) {
  for (double x = -40.0; x <= 40.0; x += 0.37) {
    EXPECT_NEAR(Sigmoid(x) + Sigmoid(-x), 1.0, 1e-15) << x;
  }
}

TEST(Softplus, ReferenceValues) {
  EXPECT_NEAR(Softplus(2.0), kSoftplus2, 4e-16);
  EXPECT_NEAR(Softplus(-1.0), kSoftplusMinus1, 1e-16);
  EXPECT_NEAR(Softplus(-50.0) / kSoftplusMinus50, 1.0, 1e-14);
  EXPECT_NEAR(Softplus(0.0), std::log(2.0), 1e-16);
}

TEST(Softplus, LargeArgumentsStayExact) {
  EXPECT_EQ(Softplus(1000.0), 1000.0);
  EXPECT_EQ(Softplus(1e300), 1e300);
  EXPECT_NEAR(Softplus(35.0), 35.0 + std::exp(-35.0), 1e-14);
  EXPECT_EQ(Softplus(-1000.0), 0.0);
}

TEST(Softplus, PropertiesOnAGrid) {
  double prev = -1.0;
  for (double x = -800.0; x <= 800.0; x += 0.5) {
    const double v = Softplus(x);
    EXPECT_TRUE(std::isfinite(v)) << x;
    EXPECT_GE(v, 0.0) << x;
    EXPECT_GE(v, x) << x;
    EXPECT_GE(v, prev) << x;
    prev = v;
  }
  // softplus(x) - softplus(-x) = x.
  for (double x = -30.0; x <= 30.0; x += 0.25) {
    EXPECT_NEAR(Softplus(x) - Softplus(-x), x, 1e-13) << x;
  }
}

TEST(Softplus, ContinuousAcrossThreshold) {
  const double below = Softplus(std::nextafter(kSoftplusThreshold, 0.0));
  const double above = Softplus(std::nextafter(kSoftplusThreshold, 100.0));
  EXPECT_NEAR(below, above, 1e-13);
}

}  // namespace
}  // namespace edge
