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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intorder/extended_real.hpp"

namespace intorder {

enum class Direction { Increasing, Decreasing };

enum class GeneratorKind {
  Identity,
  Power,             // x^gamma
  Exponential,       // exp(gamma x)
  Logarithm,         // log x
  Logit,             // log(x / (1 - x))
  NegatedLog,        // -log x
  OneMinus,          // 1 - x
  NegLogComplement,  // -log(1 - x)
  Custom,
};

/// Quadratic c0 + c1 x + c2 x^2 equal to x (1 - x) f''(x) / f'(x) on (0, 1).
///
/// Every builtin generator has such a polynomial, and the quantity is
/// invariant under f -> a f + b, so the curvature of any composite
/// g o f^-1 of builtins is decided by the sign of N_g - N_f.
struct CurvatureNumerator {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double operator()(double x) const { return c0 + x * (c1 + x * c2); }
  friend CurvatureNumerator operator-(const CurvatureNumerator& a, const CurvatureNumerator& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
};

/// A strictly monotone continuous map [0, 1] -> extended reals, finite on the
/// open interval, together with its inverse on the range.
///
/// Builtins carry exact endpoint values and a CurvatureNumerator. Custom
/// generators are validated on construction (monotonicity and inverse round
/// trip on a 1001-point grid) and throw std::invalid_argument on failure.
class Generator {
 public:
  using Fn = std::function<double(double)>;

  static Generator identity();
  static Generator power(double gamma);
  static Generator exponential(double gamma);
  static Generator logarithm();
  static Generator logit();
  static Generator negated_log();
  static Generator one_minus();
  static Generator neg_log_complement();
  static Generator custom(std::string name, Fn eval, Fn inverse, Direction direction);

  /// Names accepted by the JSON config layer, in a stable order.
  static const std::vector<std::string>& builtin_kind_names();

  ExtendedReal operator()(double x) const;

  /// f^-1(y), with y outside the range mapped to the nearest endpoint of
  /// [0, 1]; infinities are accepted.
  double inverse(ExtendedReal y) const;

  Direction direction() const { return direction_; }
  bool increasing() const { return direction_ == Direction::Increasing; }
  ExtendedReal at_zero() const { return at_zero_; }
  ExtendedReal at_one() const { return at_one_; }

  /// Endpoints of Ran(f restricted to (0, 1)), an open interval.
  ExtendedReal range_lo() const { return ext_min(at_zero_, at_one_); }
  ExtendedReal range_hi() const { return ext_max(at_zero_, at_one_); }

  GeneratorKind kind() const { return kind_; }
  bool is_builtin() const { return kind_ != GeneratorKind::Custom; }
  /// gamma for power and exponential generators, 0 otherwise.
  double parameter() const { return gamma_; }
  const std::string& name() const { return name_; }

  std::optional<CurvatureNumerator> curvature_numerator() const;

 private:
  Generator() = default;

  GeneratorKind kind_ = GeneratorKind::Identity;
  double gamma_ = 0.0;
  Direction direction_ = Direction::Increasing;
  ExtendedReal at_zero_;
  ExtendedReal at_one_;
  std::string name_;
  std::shared_ptr<const Fn> custom_eval_;
  std::shared_ptr<const Fn> custom_inverse_;
};

/// Grid check of the generator invariants. Returns a description of the first
/// violation, or nullopt when the generator passes.
std::optional<std::string> generator_violation(const Generator& f, int samples = 1001);

}  // namespace intorder
