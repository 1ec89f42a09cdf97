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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intorder/admissibility.hpp"
#include "intorder/aggregator.hpp"
#include "intorder/interval.hpp"

namespace intorder {

enum class Ordering { Less, Equal, Greater };

std::string_view to_string(Ordering o);

/// The pair of values an interval is compared on, primary first.
struct OrderKey {
  double primary;
  double secondary;
};

/// Tolerance for ties between key values.
inline constexpr double kOrderTieTol = 1e-12;

/// A total order on intervals: lexicographic comparison of (A(z), B(z)) for a
/// pair of aggregation functions, or of (K_alpha(z), K_beta(z)).
class TotalOrderSpec {
 public:
  /// Throws std::invalid_argument unless alpha, beta lie in [0, 1] and differ.
  static TotalOrderSpec alpha_beta(double alpha, double beta);

  /// Runs check_pair first and throws std::invalid_argument when the pair is
  /// NotAdmissible. Unknown pairs are accepted; the verdict is kept.
  static TotalOrderSpec generated(AggregationFunction a, AggregationFunction b, const CheckOptions& opts = {});

  /// No admissibility check; checked() reports false.
  static TotalOrderSpec generated_unchecked(AggregationFunction a, AggregationFunction b);

  static TotalOrderSpec lexicographic() { return alpha_beta(0.0, 1.0); }
  static TotalOrderSpec antilexicographic() { return alpha_beta(1.0, 0.0); }
  static TotalOrderSpec xu_yager() { return alpha_beta(0.5, 1.0); }
  static TotalOrderSpec information_quality() { return alpha_beta(0.5, 0.0); }

  OrderKey key(const Interval& z) const;

  bool is_alpha_beta() const { return alpha_.has_value(); }
  /// Only meaningful when is_alpha_beta().
  double alpha() const { return alpha_.value_or(0.0); }
  double beta() const { return beta_.value_or(0.0); }

  const AggregationFunction& first() const { return a_; }
  const AggregationFunction& second() const { return b_; }

  bool checked() const { return verdict_.has_value(); }
  const std::optional<AdmissibilityVerdict>& verdict() const { return verdict_; }

  std::string name() const;

 private:
  TotalOrderSpec(AggregationFunction a, AggregationFunction b) : a_(std::move(a)), b_(std::move(b)) {}

  AggregationFunction a_;
  AggregationFunction b_;
  std::optional<double> alpha_;
  std::optional<double> beta_;
  std::optional<AdmissibilityVerdict> verdict_;
};

Ordering compare_keys(const OrderKey& p, const OrderKey& q);
Ordering compare(const TotalOrderSpec& spec, const Interval& u, const Interval& x);

/// Stable ascending sort.
std::vector<Interval> sort_intervals(const TotalOrderSpec& spec, const std::vector<Interval>& items);

/// Positions of items in ascending order (stable).
std::vector<std::size_t> rank_indices(const TotalOrderSpec& spec, const std::vector<Interval>& items);

/// True iff no grid pair with u <= x componentwise compares as Greater.
/// Requires resolution >= 20.
bool refines_interval_order(const TotalOrderSpec& spec, int resolution);

}  // namespace intorder
