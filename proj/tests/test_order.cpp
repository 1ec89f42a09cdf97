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

#include "intorder/order.hpp"
#include "support.hpp"

using namespace intorder;

TEST(Order, AlphaBetaValidation) {
  EXPECT_THROW(TotalOrderSpec::alpha_beta(0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(TotalOrderSpec::alpha_beta(-0.1, 0.5), std::invalid_argument);
  EXPECT_TRUE(TotalOrderSpec::xu_yager().is_alpha_beta());
}

TEST(Order, LexicographicRanking) {
  const std::vector<Interval> items = {{0.3, 0.5}, {0.1, 0.9}, {0.3, 0.4}};
  const auto idx = rank_indices(TotalOrderSpec::lexicographic(), items);
  EXPECT_EQ(idx, (std::vector<std::size_t>{1, 2, 0}));
  const auto anti = rank_indices(TotalOrderSpec::antilexicographic(), items);
  EXPECT_EQ(anti, (std::vector<std::size_t>{2, 0, 1}));
}

TEST(Order, XuYagerBreaksTiesByUpperEndpoint) {
  // Same midpoint, so the secondary key K_1 decides.
  EXPECT_EQ(compare(TotalOrderSpec::xu_yager(), {0.4, 0.6}, {0.3, 0.7}), Ordering::Less);
  EXPECT_EQ(compare(TotalOrderSpec::information_quality(), {0.4, 0.6}, {0.3, 0.7}), Ordering::Greater);
}

TEST(Order, GeneratedRejectsNonAdmissiblePairs) {
  EXPECT_THROW(TotalOrderSpec::generated(AggregationFunction::wgm(0.5), AggregationFunction::wgm(0.5)),
               std::invalid_argument);
  const auto unchecked =
      TotalOrderSpec::generated_unchecked(AggregationFunction::wgm(0.5), AggregationFunction::wgm(0.5));
  EXPECT_FALSE(unchecked.checked());
  const auto ok = TotalOrderSpec::generated(AggregationFunction::wrm(2.0, 0.5), AggregationFunction::wrm(0.5, 0.5));
  ASSERT_TRUE(ok.checked());
  EXPECT_EQ(ok.verdict()->outcome, Outcome::Admissible);
}

TEST(Order, EqualIntervalsCompareEqual) {
  EXPECT_EQ(compare(TotalOrderSpec::lexicographic(), {0.2, 0.3}, {0.2, 0.3}), Ordering::Equal);
}

TEST(Order, SortIsStableAndDeterministic) {
  const std::vector<Interval> items = {{0.2, 0.3}, {0.1, 0.2}, {0.2, 0.3}, {0.0, 1.0}};
  const auto idx = rank_indices(TotalOrderSpec::lexicographic(), items);
  EXPECT_EQ(idx, (std::vector<std::size_t>{3, 1, 0, 2}));
}

TEST(Order, RefinesIntervalOrder) {
  EXPECT_TRUE(refines_interval_order(TotalOrderSpec::xu_yager(), 30));
  // A decreasing primary key reverses the componentwise order.
  const auto bad = TotalOrderSpec::generated_unchecked(
      AggregationFunction::custom("flip", [](double lo, double hi) { return 1.0 - 0.5 * (lo + hi); }),
      AggregationFunction::k_projection(1.0));
  EXPECT_FALSE(refines_interval_order(bad, 30));
}

TEST(OrderProperty, TotalAntisymmetricTransitive) {
  proptest::Gen gen;
  const std::vector<TotalOrderSpec> specs = {
      TotalOrderSpec::lexicographic(), TotalOrderSpec::xu_yager(), TotalOrderSpec::alpha_beta(0.3, 0.8),
      TotalOrderSpec::generated(AggregationFunction::wrm(2.0, 0.5), AggregationFunction::wrm(0.5, 0.5))};
  for (const auto& s : specs) {
    for (int k = 0; k < 3000; ++k) {
      const Interval u = gen.interval_with_edges(), v = gen.interval_with_edges(), x = gen.interval_with_edges();
      const Ordering uv = compare(s, u, v), vu = compare(s, v, u);
      EXPECT_EQ(uv == Ordering::Less, vu == Ordering::Greater) << s.name();
      if (uv == Ordering::Equal) EXPECT_EQ(u, v) << s.name();
      if (uv != Ordering::Greater && compare(s, v, x) != Ordering::Greater) {
        EXPECT_NE(compare(s, u, x), Ordering::Greater) << s.name();
      }
    }
  }
}

TEST(OrderProperty, SortedOutputIsNonDecreasing) {
  proptest::Gen gen;
  std::vector<Interval> items;
  for (int k = 0; k < 500; ++k) items.push_back(gen.interval_with_edges());
  const auto spec = TotalOrderSpec::information_quality();
  const auto sorted = sort_intervals(spec, items);
  ASSERT_EQ(sorted.size(), items.size());
  for (std::size_t i = 1; i < sorted.size(); ++i) EXPECT_NE(compare(spec, sorted[i - 1], sorted[i]), Ordering::Greater);
}
