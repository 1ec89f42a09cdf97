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

#include "intorder/coincidence.hpp"
#include "support.hpp"

using namespace intorder;

namespace {

AggregationFunction schur(double gamma) { return AggregationFunction::schur_pair_mean(Generator::power(gamma)); }

}  // namespace

TEST(Coincidence, KCrossover) {
  const auto a = k_crossover({0.36, 0.82}, {0.08, 0.92});
  ASSERT_TRUE(a);
  EXPECT_NEAR(*a, 14.0 / 19.0, 1e-12);
  EXPECT_FALSE(k_crossover({0.1, 0.2}, {0.5, 0.6}).has_value());
}

TEST(Coincidence, IdenticalOrdersCoincide) {
  const auto r = orders_coincide(TotalOrderSpec::xu_yager(), TotalOrderSpec::alpha_beta(0.5, 0.9), 60);
  EXPECT_TRUE(r.coincide);
  EXPECT_EQ(r.disagreements, 0);
  EXPECT_FALSE(r.witness);
}

TEST(Coincidence, LexAndAntilexDisagree) {
  const auto r = orders_coincide(TotalOrderSpec::lexicographic(), TotalOrderSpec::antilexicographic(), 50);
  EXPECT_FALSE(r.coincide);
  ASSERT_TRUE(r.witness);
  EXPECT_NE(r.witness->first, r.witness->second);
  EXPECT_EQ(static_cast<std::size_t>(r.disagreements),
            all_disagreements(TotalOrderSpec::lexicographic(), TotalOrderSpec::antilexicographic(), 50).size());
}

TEST(Coincidence, ThreadCountDoesNotChangeReport) {
  const auto ab = TotalOrderSpec::generated(schur(2.0), schur(0.5));
  const auto other = TotalOrderSpec::alpha_beta(0.7, 1.0);
  const auto r1 = orders_coincide(ab, other, 60, 1);
  const auto r4 = orders_coincide(ab, other, 60, 4);
  EXPECT_EQ(r1.disagreements, r4.disagreements);
  ASSERT_TRUE(r1.witness && r4.witness);
  EXPECT_EQ(r1.witness->u, r4.witness->u);
  EXPECT_EQ(r1.witness->x, r4.witness->x);
  EXPECT_EQ(r1.alpha_thresholds, r4.alpha_thresholds);
}

TEST(Coincidence, SchurClassification) {
  EXPECT_EQ(schur_classify(schur(2.0), 60), SchurClass::StrictlySchurConvex);
  EXPECT_EQ(schur_classify(schur(0.5), 60), SchurClass::StrictlySchurConcave);
  EXPECT_EQ(schur_classify(AggregationFunction::k_projection(0.5), 60), SchurClass::Constant);
  EXPECT_EQ(schur_classify(AggregationFunction::k_projection(0.8), 60), SchurClass::StrictlySchurConvex);
  const auto wide = AggregationFunction::custom("spread", [](double lo, double hi) {
    return 0.5 * (lo + hi) + 0.1 * (hi - lo) * (hi - lo);
  });
  EXPECT_EQ(schur_classify(wide, 60), SchurClass::SchurConvex);
}

TEST(Coincidence, MidpointPairMatchesAlphaBetaOrder) {
  const auto convex = check_prop51(schur(2.0), 60);
  EXPECT_TRUE(convex.coincide);
  EXPECT_EQ(convex.certainty, "proved");
  EXPECT_THROW(check_prop51(AggregationFunction::k_projection(0.5), 60), std::invalid_argument);
}

TEST(Coincidence, DisagreementConstruction) {
  for (double alpha : {0.0, 0.25, 0.5, 0.6, 0.75, 1.0}) {
    const bool convex = alpha <= 0.5;
    const Generator f = Generator::power(convex ? 2.0 : 0.5);
    const auto [p, q] = prop53_counterexample(f, alpha, alpha == 1.0 ? 0.0 : 1.0);
    auto a = [&](const Interval& z) { return 0.5 * (f(z.lo()).value() + f(z.hi()).value()); };
    EXPECT_LT(a(p), a(q)) << alpha;
    EXPECT_LT(k_projection(alpha, q), k_projection(alpha, p)) << alpha;
  }
  EXPECT_THROW(prop53_counterexample(Generator::power(2.0), 0.3, 0.3), std::invalid_argument);
  EXPECT_THROW(prop53_counterexample(Generator::power(2.0), 0.8, 1.0), std::invalid_argument);
  EXPECT_THROW(prop53_counterexample(Generator::identity(), 0.3, 1.0), std::invalid_argument);
}
