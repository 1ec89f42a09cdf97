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

#include "intorder/aggregator.hpp"
#include "support.hpp"

using namespace intorder;

TEST(Aggregator, WeightedPowerMean) {
  const auto a = AggregationFunction::wrm(2.0, 0.25);
  EXPECT_NEAR(a(0.2, 0.6), std::sqrt(0.75 * 0.04 + 0.25 * 0.36), 1e-15);
}

TEST(Aggregator, WeightedGeometricMeanExponents) {
  const auto a = AggregationFunction::wgm(0.3);
  EXPECT_NEAR(a(0.2, 0.8), std::pow(0.2, 0.7) * std::pow(0.8, 0.3), 1e-15);
  EXPECT_EQ(a(0.0, 0.8), 0.0);
}

TEST(Aggregator, LogitMeanZeroOverZero) {
  const auto a = AggregationFunction::wm(0.5);
  EXPECT_EQ(a(0.0, 1.0), 0.0);
  EXPECT_EQ(a(1.0, 1.0), 1.0);
  const double num = std::sqrt(0.2 * 0.6), den = num + std::sqrt(0.8 * 0.4);
  EXPECT_NEAR(a(0.2, 0.6), num / den, 1e-15);
}

TEST(Aggregator, ExponentialMean) {
  const auto a = AggregationFunction::wem(2.0, 0.5);
  EXPECT_NEAR(a(0.1, 0.9), std::log(0.5 * std::exp(0.2) + 0.5 * std::exp(1.8)) / 2.0, 1e-14);
}

TEST(Aggregator, TNormsAndConorms) {
  const auto luk = AggregationFunction::tnorm(AdditiveGeneratorTNorm(Generator::one_minus()));
  const auto prod = AggregationFunction::tnorm(AdditiveGeneratorTNorm(Generator::negated_log()));
  const auto bounded = AggregationFunction::tconorm(AdditiveGeneratorTConorm(Generator::identity()));
  const auto prob = AggregationFunction::tconorm(AdditiveGeneratorTConorm(Generator::neg_log_complement()));
  proptest::Gen gen;
  for (int k = 0; k < 2000; ++k) {
    const Interval z = gen.interval_with_edges();
    const double a = z.lo(), b = z.hi();
    EXPECT_NEAR(luk(z), std::max(0.0, a + b - 1.0), 1e-12);
    EXPECT_NEAR(prod(z), a * b, 1e-12);
    EXPECT_NEAR(bounded(z), std::min(1.0, a + b), 1e-12);
    EXPECT_NEAR(prob(z), a + b - a * b, 1e-12);
  }
}

TEST(Aggregator, ArchimedeanKind) {
  EXPECT_EQ(AdditiveGeneratorTNorm(Generator::one_minus()).kind(), ArchimedeanKind::Nilpotent);
  EXPECT_EQ(AdditiveGeneratorTNorm(Generator::negated_log()).kind(), ArchimedeanKind::Strict);
  EXPECT_EQ(AdditiveGeneratorTConorm(Generator::identity()).kind(), ArchimedeanKind::Nilpotent);
  EXPECT_EQ(AdditiveGeneratorTConorm(Generator::neg_log_complement()).kind(), ArchimedeanKind::Strict);
  EXPECT_THROW(AdditiveGeneratorTNorm(Generator::identity()), std::invalid_argument);
  EXPECT_THROW(AdditiveGeneratorTConorm(Generator::one_minus()), std::invalid_argument);
}

TEST(Aggregator, FactoryValidation) {
  EXPECT_THROW(AggregationFunction::k_projection(1.5), std::invalid_argument);
  EXPECT_THROW(AggregationFunction::quasi_linear_mean(Generator::identity(), 0.0), std::invalid_argument);
  EXPECT_THROW(AggregationFunction::schur_pair_mean(Generator::exponential(1.0)), std::invalid_argument);
}

TEST(Aggregator, ViolationDetectsBrokenCustom) {
  const auto bad = AggregationFunction::custom("bad", [](double lo, double) { return 1.0 - lo; });
  EXPECT_TRUE(aggregation_violation(bad, 20).has_value());
  const auto good = AggregationFunction::custom("mid", [](double lo, double hi) { return 0.5 * (lo + hi); });
  EXPECT_FALSE(aggregation_violation(good, 20).has_value());
}

TEST(AggregatorProperty, BuiltinsAreAggregationFunctions) {
  const std::vector<AggregationFunction> fs = {
      AggregationFunction::wrm(-1.5, 0.3), AggregationFunction::wrm(3.0, 0.6), AggregationFunction::wem(-2.0, 0.4),
      AggregationFunction::wgm(0.7),       AggregationFunction::wm(0.2),       AggregationFunction::k_projection(0.3),
      AggregationFunction::schur_pair_mean(Generator::power(2.0))};
  for (const auto& f : fs) EXPECT_FALSE(aggregation_violation(f, 60).has_value()) << f.name();
}

TEST(AggregatorProperty, QuasiLinearMeansLieBetweenEndpoints) {
  proptest::Gen gen;
  for (int k = 0; k < 3000; ++k) {
    const Interval z = gen.interval_with_edges();
    const double w = gen.uniform(0.01, 0.99);
    const double gamma = gen.uniform(-3.0, 3.0);
    if (std::abs(gamma) < 1e-3) continue;
    for (const auto& f : {AggregationFunction::wrm(gamma, w), AggregationFunction::wem(gamma, w),
                          AggregationFunction::wgm(w), AggregationFunction::wm(w)}) {
      const double v = f(z);
      EXPECT_GE(v, z.lo()) << f.name();
      EXPECT_LE(v, z.hi()) << f.name();
    }
  }
}
