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

#include <compare>
#include <ostream>
#include <vector>

namespace intorder {

/// Absolute tolerance used when comparing projected values for equality.
inline constexpr double kProjectionEqTol = 1e-12;

/// A closed subinterval [lo, hi] of [0, 1]. Degenerate intervals are allowed.
///
/// Construction clamps endpoints lying within 1e-15 outside [0, 1] onto the
/// boundary and throws std::invalid_argument for anything else out of range,
/// including lo > hi and NaN.
class Interval {
 public:
  Interval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  bool is_degenerate() const { return lo_ == hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

  /// Lexicographic on (lo, hi). Used for deterministic witness selection only;
  /// it is not one of the orders this library constructs.
  friend std::strong_ordering lex_compare(const Interval& a, const Interval& b);

  friend std::ostream& operator<<(std::ostream& os, const Interval& z) {
    return os << '[' << z.lo_ << ", " << z.hi_ << ']';
  }

 private:
  double lo_;
  double hi_;
};

enum class PartialComparison { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

/// K_w(z) = (1 - w) z.lo + w z.hi. Throws for w outside [0, 1].
double k_projection(double w, const Interval& z);

/// Componentwise (interval) order.
PartialComparison interval_partial_compare(const Interval& u, const Interval& x);

/// Largest endpoint gap between two intervals.
double endpoint_distance(const Interval& u, const Interval& x);

/// All intervals [i/n, j/n] with 0 <= i <= j <= n, in lexicographic order.
std::vector<Interval> interval_grid(int n);

}  // namespace intorder
