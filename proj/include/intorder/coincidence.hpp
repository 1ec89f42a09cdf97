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

#include "intorder/order.hpp"

namespace intorder {

/// A pair ordered strictly one way by the first order and the other way by
/// the second.
struct Disagreement {
  Interval u;
  Interval x;
  Ordering first;   // u vs x under the first order
  Ordering second;  // u vs x under the second order
};

struct CoincidenceReport {
  bool coincide = true;
  std::optional<Disagreement> witness;
  std::size_t disagreements = 0;
  /// For an (alpha, beta) second order: alpha at which K_alpha(u) = K_alpha(x)
  /// for the witness, when it lies in [0, 1].
  std::vector<double> alpha_thresholds;
  /// "proved" when backed by strict Schur-convexity from closed form, "grid"
  /// otherwise.
  std::string certainty = "grid";
  int resolution = 0;
};

/// Compares both orders on every pair of the interval grid with step
/// 1/resolution. The witness is the first disagreement in grid order.
/// Requires resolution >= 50.
CoincidenceReport orders_coincide(const TotalOrderSpec& first, const TotalOrderSpec& second, int resolution,
                                  int threads = 1);

/// Same comparison restricted to the given intervals, in their order.
CoincidenceReport orders_coincide_on(const TotalOrderSpec& first, const TotalOrderSpec& second,
                                     const std::vector<Interval>& items);

/// Every strict disagreement on the grid, in grid order.
std::vector<Disagreement> all_disagreements(const TotalOrderSpec& first, const TotalOrderSpec& second,
                                            int resolution);

/// alpha in [0, 1] with K_alpha(u) = K_alpha(x), found by bisection; nullopt
/// when K_alpha(u) - K_alpha(x) keeps one strict sign on [0, 1].
std::optional<double> k_crossover(const Interval& u, const Interval& x);

/// Constant means the function depends only on lo + hi.
enum class SchurClass {
  StrictlySchurConvex,
  SchurConvex,
  StrictlySchurConcave,
  SchurConcave,
  Constant,
  Neither,
  Unknown
};

std::string_view to_string(SchurClass c);

/// Behaviour of F along the segments lo + hi = const as the interval spreads.
/// Strict classes come only from closed form: Schur means of builtin
/// generators and K_w. Everything else is scanned on the grid and can only be
/// non-strict. Requires resolution >= 50.
SchurClass schur_classify(const AggregationFunction& f, int resolution);

/// Checks the order generated by (K_0.5, b) against the (0.5, 1)-order when b
/// is Schur-convex and against the (0.5, 0)-order when b is Schur-concave.
/// Throws std::invalid_argument unless (K_0.5, b) is admissible.
CoincidenceReport check_prop51(const AggregationFunction& b, int resolution, int threads = 1);

/// Pair (first, second) with A(first) < A(second) for A = 0.5 (f(lo) + f(hi)),
/// hence first before second in any order generated by (A, B), while second
/// comes strictly before first in the (alpha, beta)-order. f must be convex
/// for alpha <= 0.5 and concave for alpha > 0.5 (the reflected construction).
/// Throws std::invalid_argument when alpha == beta or f has the wrong shape,
/// std::runtime_error if the final strict inequalities fail to verify.
std::pair<Interval, Interval> prop53_counterexample(const Generator& f, double alpha, double beta);

}  // namespace intorder
