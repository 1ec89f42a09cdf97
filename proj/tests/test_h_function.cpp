// Copyright 2026 The intorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "intorder/h_function.hpp"
#include "support.hpp"

using namespace intorder;

TEST(HFunction, ZeroAtOrigin) {
  auto h = [](double x) { return x * x; };
  EXPECT_EQ(h_function(0.0, 0.2, 0.7, 0.3, 0.6, h), 0.0);
}

TEST(HFunction, ValidatesArguments) {
  auto h = [](double x) { return x; };
  EXPECT_THROW(h_function(0.1, 0.5, 0.5, 0.5, 0.5, h), std::invalid_argument);
  EXPECT_THROW(h_function(0.6, 0.2, 0.7, 0.5, 0.5, h), std::invalid_argument);
}

TEST(HFunction, HandComputedValue) {
  // h = x^2, t = (0, 1), v1 = v2 = 0.5, x = 1:
  // 0.5 (0.25 - 0) + 0.5 (0.25 - 1) = -0.25.
  EXPECT_DOUBLE_EQ(h_function(1.0, 0.0, 1.0, 0.5, 0.5, [](double x) { return x * x; }), -0.25);
}

TEST(Adm2Scan, ConvexAndConcaveHold) {
  EXPECT_EQ(adm2_scan([](double x) { return x * x; }, 0.0, 1.0, 0.5, 0.5, 40).status, Adm2Status::Holds);
  EXPECT_EQ(adm2_scan([](double x) { return std::log(x); }, 0.1, 1.0, 0.3, 0.3, 40).status, Adm2Status::Holds);
}

TEST(Adm2Scan, AffineFails) {
  const auto r = adm2_scan([](double x) { return 2 * x; }, 0.0, 1.0, 0.5, 0.5, 30);
  EXPECT_EQ(r.status, Adm2Status::FailsAt);
}

TEST(Adm2Scan, SignChangeFails) {
  // Unequal weights on a convex map can cross zero.
  const auto r = adm2_scan([](double x) { return x * x; }, 0.0, 1.0, 0.9, 0.1, 40);
  EXPECT_EQ(r.status, Adm2Status::FailsAt);
  EXPECT_GT(r.x, 0.0);
}

TEST(Adm2Scan, SqrtOnOneTwoHolds) {
  EXPECT_EQ(adm2_scan([](double x) { return std::sqrt(x); }, 1.0, 2.0, 0.4, 0.6, 50).status, Adm2Status::Holds);
}

TEST(Adm2Scan, RejectsCoarseGrid) {
  EXPECT_THROW(adm2_scan([](double x) { return x; }, 0.0, 1.0, 0.5, 0.5, 8), std::invalid_argument);
}

TEST(Adm2SlopeTest, MatchesInequality) {
  // factor = (1 - v1) v2 / ((1 - v2) v1) = 0.6 * 0.6 / (0.4 * 0.4) = 2.25.
  EXPECT_TRUE(adm2_concave_slope_test(2.0, 1.0, 0.4, 0.6));
  EXPECT_FALSE(adm2_concave_slope_test(2.5, 1.0, 0.4, 0.6));
}

TEST(HFunctionProperty, SignFollowsCurvatureForEqualWeights) {
  proptest::Gen gen;
  auto convex = [](double x) { return std::exp(3 * x); };
  auto concave = [](double x) { return std::sqrt(x + 0.1); };
  for (int k = 0; k < 3000; ++k) {
    double t1 = gen.unit(), t2 = gen.unit();
    if (t1 > t2) std::swap(t1, t2);
    if (t2 - t1 < 1e-3) continue;
    const double v = gen.uniform(0.05, 0.95);
    const double x = gen.uniform(1e-3, 1.0) * (t2 - t1);
    EXPECT_LT(h_function(x, t1, t2, v, v, convex), 0.0);
    EXPECT_GT(h_function(x, t1, t2, v, v, concave), 0.0);
  }
}
