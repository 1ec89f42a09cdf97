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

#include "intorder/generator.hpp"
#include "intorder/shape.hpp"
#include "support.hpp"

using namespace intorder;
using intorder::proptest::builtin_for;
using intorder::proptest::plain_generators;

TEST(Generator, EndpointValues) {
  EXPECT_TRUE(Generator::logarithm().at_zero().is_neg_inf());
  EXPECT_EQ(Generator::logarithm().at_one().value(), 0.0);
  EXPECT_TRUE(Generator::logit().at_zero().is_neg_inf());
  EXPECT_TRUE(Generator::logit().at_one().is_pos_inf());
  EXPECT_TRUE(Generator::power(-2.0).at_zero().is_pos_inf());
  EXPECT_EQ(Generator::power(3.0).at_zero().value(), 0.0);
  EXPECT_TRUE(Generator::negated_log().at_zero().is_pos_inf());
  EXPECT_FALSE(Generator::negated_log().increasing());
  EXPECT_TRUE(Generator::neg_log_complement().at_one().is_pos_inf());
}

TEST(Generator, PowerRejectsZeroExponent) { EXPECT_THROW(Generator::power(0.0), std::invalid_argument); }

TEST(Generator, CustomValidatesRoundTrip) {
  auto bad = [] {
    return Generator::custom("bad", [](double x) { return x * x; }, [](double y) { return y; },
                             Direction::Increasing);
  };
  EXPECT_THROW(bad(), std::invalid_argument);
  const auto cube = Generator::custom("cube", [](double x) { return x * x * x; },
                                      [](double y) { return std::cbrt(y); }, Direction::Increasing);
  EXPECT_NEAR(cube(0.5).value(), 0.125, 1e-15);
}

TEST(GeneratorProperty, MatchesPlainFormulasAndInverts) {
  proptest::Gen gen;
  for (const auto& p : plain_generators()) {
    const Generator g = builtin_for(p.name);
    for (int k = 0; k < 500; ++k) {
      const double x = gen.uniform(0.01, 0.99);
      EXPECT_NEAR(g(x).value(), p.f(x), 1e-12 * std::max(1.0, std::abs(p.f(x)))) << p.name;
      EXPECT_NEAR(g.inverse(g(x)), x, 1e-12) << p.name;
    }
  }
}

TEST(Shape, KnownComposites) {
  // x^2 o sqrt = identity.
  EXPECT_EQ(composite(Generator::power(0.5), Generator::power(1.0)).shape.convexity, Convexity::StrictlyConvex);
  EXPECT_EQ(composite(Generator::identity(), Generator::power(2.0)).shape.convexity, Convexity::StrictlyConvex);
  EXPECT_EQ(composite(Generator::identity(), Generator::power(0.5)).shape.convexity, Convexity::StrictlyConcave);
  EXPECT_EQ(composite(Generator::power(2.0), Generator::power(2.0)).shape.convexity, Convexity::Affine);
  // exp composed with log is the identity after the affine rescaling.
  EXPECT_EQ(composite(Generator::logarithm(), Generator::identity()).shape.convexity, Convexity::StrictlyConvex);
  EXPECT_TRUE(composite(Generator::identity(), Generator::power(2.0)).shape.closed_form);
}

TEST(Shape, ConvexityPredicates) {
  EXPECT_TRUE(is_convex(Convexity::Affine));
  EXPECT_TRUE(is_concave(Convexity::Affine));
  EXPECT_FALSE(is_strict(Convexity::Affine));
  EXPECT_TRUE(is_convex(Convexity::StrictlyConvex));
  EXPECT_FALSE(is_concave(Convexity::Mixed));
}

TEST(Shape, NumericClassifier) {
  const OpenRange unit{0.0, 1.0};
  EXPECT_EQ(classify_convexity_numeric([](double x) { return x * x; }, unit), Convexity::Convex);
  EXPECT_EQ(classify_convexity_numeric([](double x) { return std::sqrt(x); }, unit), Convexity::Concave);
  EXPECT_EQ(classify_convexity_numeric([](double x) { return 3 * x - 1; }, unit), Convexity::Affine);
  EXPECT_EQ(classify_convexity_numeric([](double x) { return std::sin(6 * x); }, unit), Convexity::Mixed);
}

TEST(Shape, CustomGeneratorGoesNumeric) {
  const auto cube = Generator::custom("cube", [](double x) { return x * x * x; },
                                      [](double y) { return std::cbrt(y); }, Direction::Increasing);
  const auto c = composite(Generator::identity(), cube);
  EXPECT_FALSE(c.shape.closed_form);
  EXPECT_EQ(c.shape.convexity, Convexity::Convex);
}

// Oracle: second differences of g o f^-1 from the plain formulas must agree
// with every strict closed-form verdict.
TEST(ShapeProperty, ClosedFormAgreesWithSecondDifferences) {
  const auto plains = plain_generators();
  for (const auto& pf : plains) {
    for (const auto& pg : plains) {
      const Composite c = composite(builtin_for(pf.name), builtin_for(pg.name));
      if (!is_strict(c.shape.convexity)) continue;
      const int sign = c.shape.convexity == Convexity::StrictlyConvex ? 1 : -1;
      for (int k = 1; k < 40; ++k) {
        const double x = 0.05 + 0.9 * k / 40.0;
        const double y = pf.f(x);
        const double h = 1e-3 * std::max(1.0, std::abs(y));
        auto comp = [&](double t) { return pg.f(pf.inv(t)); };
        const double d2 = comp(y + h) - 2 * comp(y) + comp(y - h);
        EXPECT_GT(sign * d2, -1e-12) << pf.name << " -> " << pg.name << " at " << x;
      }
    }
  }
}
