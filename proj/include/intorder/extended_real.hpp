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

#include <cmath>
#include <limits>
#include <ostream>

namespace intorder {

/// A real number or one of +inf / -inf.
///
/// Addition resolves the indeterminate form to -inf: (-inf) + (+inf) = -inf.
/// This is the convention under which quasi-linear means with generators that
/// are infinite at both endpoints (logit) stay well defined.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedReal pos_inf() { return {std::numeric_limits<double>::infinity()}; }
  static constexpr ExtendedReal neg_inf() { return {-std::numeric_limits<double>::infinity()}; }

  constexpr double value() const { return value_; }
  bool is_finite() const { return std::isfinite(value_); }
  bool is_pos_inf() const { return std::isinf(value_) && value_ > 0; }
  bool is_neg_inf() const { return std::isinf(value_) && value_ < 0; }
  bool is_infinite() const { return std::isinf(value_); }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
      return neg_inf();
    }
    return {a.value_ + b.value_};
  }

  /// Scaling by a finite, strictly positive weight. Zero weights would produce
  /// 0 * inf; callers never need them.
  friend ExtendedReal operator*(double w, ExtendedReal a) {
    if (a.is_infinite()) return a;
    return {w * a.value_};
  }

  friend ExtendedReal operator-(ExtendedReal a) { return {-a.value_}; }

  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) = default;
  friend constexpr auto operator<=>(ExtendedReal a, ExtendedReal b) { return a.value_ <=> b.value_; }

  friend std::ostream& operator<<(std::ostream& os, ExtendedReal a) {
    if (a.is_pos_inf()) return os << "+inf";
    if (a.is_neg_inf()) return os << "-inf";
    return os << a.value_;
  }

 private:
  double value_ = 0.0;
};

inline ExtendedReal ext_min(ExtendedReal a, ExtendedReal b) { return b < a ? b : a; }
inline ExtendedReal ext_max(ExtendedReal a, ExtendedReal b) { return a < b ? b : a; }

/// |a| on the extended line.
inline ExtendedReal ext_abs(ExtendedReal a) { return a < ExtendedReal{0.0} ? -a : a; }

}  // namespace intorder
