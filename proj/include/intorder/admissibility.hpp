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
#include <string_view>
#include <utility>

#include "intorder/aggregator.hpp"
#include "intorder/interval.hpp"
#include "intorder/shape.hpp"

namespace intorder {

enum class Outcome { Admissible, NotAdmissible, Unknown };

std::string_view to_string(Outcome o);

/// Two distinct intervals on which both functions of a pair agree.
struct Witness {
  Interval u;
  Interval x;
  double residual_a = 0.0;  // |A(u) - A(x)|
  double residual_b = 0.0;  // |B(u) - B(x)|
};

struct AdmissibilityVerdict {
  Outcome outcome = Outcome::Unknown;
  /// The criterion that decided the outcome: "K-alpha-beta", "Ex 2.6",
  /// "Thm 4.1", "Cor 4.4", "Thm 4.3 / Table 1", "Thm 4.8", "Thm 4.9",
  /// "Thm 4.10", "oracle", or "none".
  std::string rule;
  std::optional<Witness> witness;
  std::string evidence;
  /// Set when the oracle was run as a cross-check on a rule verdict.
  std::optional<bool> oracle_agrees;
};

struct PairSpec {
  AggregationFunction a;
  AggregationFunction b;
};

struct CheckOptions {
  /// Run the oracle when no rule decides the pair.
  bool oracle_fallback = true;
  /// Also run the oracle after a rule verdict and record agreement.
  bool cross_check = false;
  int oracle_resolution = 200;
  double tol = 1e-9;
  int threads = 1;
};

/// Smallest endpoint gap accepted between the two intervals of a witness.
inline constexpr double kWitnessMinGap = 1e-4;

/// Builds a witness from a candidate pair, ordered lexicographically. Returns
/// nullopt unless both residuals are within tol and the gap is >= 1e-4.
std::optional<Witness> make_witness(const AggregationFunction& a, const AggregationFunction& b, const Interval& u,
                                    const Interval& x, double tol = 1e-9);

/// Rule engine with oracle fallback. Outcomes are symmetric in (a, b), and
/// every NotAdmissible verdict carries a witness unless the evidence says
/// otherwise.
AdmissibilityVerdict check_pair(const PairSpec& spec, const CheckOptions& opts = {});

/// An infinite endpoint value shared by f and g rules the pair out.
std::optional<AdmissibilityVerdict> rule_quasi_endpoint_exclusion(const Generator& f, double w1, const Generator& g,
                                                                  double w2);

/// Equal weights: admissible iff the endpoint values are finite and g o f^-1 is
/// strictly convex or strictly concave. Non-strict closed-form shapes give
/// NotAdmissible with a witness found by search; numerical shapes give
/// Unknown.
std::optional<AdmissibilityVerdict> rule_quasi_equal_weights(const Generator& f, const Generator& g, double w,
                                                             const CheckOptions& opts = {});

/// Sign table for w1 != w2, tried with both argument orders. Only closed-form
/// shapes are trusted. Returns nullopt when no row matches.
std::optional<AdmissibilityVerdict> rule_quasi_unequal_weights(const Generator& f, double w1, const Generator& g,
                                                               double w2);

/// (K_0, B) is admissible iff x -> B(x1, x) is strictly increasing for
/// every x1; dually (K_1, B) with x -> B(x, x2). Decided on a grid with a
/// strictness margin of tol. w must be 0 or 1.
AdmissibilityVerdict rule_k0_k1(double w, const AggregationFunction& b, int resolution = 200, double tol = 1e-9);

/// Strict pairs are admissible iff s o t^-1 is strictly convex or concave;
/// a nilpotent member always gives a counterexample.
AdmissibilityVerdict rule_tnorm_tconorm(const AdditiveGeneratorTNorm& t, const AdditiveGeneratorTConorm& s,
                                        const CheckOptions& opts = {});

/// A = 0.5 (f(u1) + f(u2)), B = 0.5 (g(u1) + g(u2)): admissible iff g o f^-1
/// is strictly convex or strictly concave.
AdmissibilityVerdict rule_schur_pair(const Generator& f, const Generator& g, const CheckOptions& opts = {});

/// The three-case construction for a pair with a nilpotent member. Returns
/// (u, x) with u degenerate and T, S equal on both. Throws
/// std::invalid_argument when both generators are strict.
std::pair<Interval, Interval> nilpotent_counterexample(const AdditiveGeneratorTNorm& t,
                                                       const AdditiveGeneratorTConorm& s);

/// Grid search for distinct u, x with A(u) = A(x) and B(u) = B(x).
///
/// First pass: every grid interval of step 1/resolution is compared with the
/// degenerate interval on its A-level, and sign changes of the B-difference
/// between grid neighbours are refined by bisection. Second pass, run only
/// when the first finds nothing: level curves of A (and then of B) are
/// traced at every grid level and the other function is scanned along each
/// for a turning point or a flat stretch. Candidates are confirmed to 1e-10
/// (or tol if smaller) and must be at least 1e-4 apart; the lexicographically
/// smallest confirmed witness of the deciding pass is returned. "None" is
/// evidence, not proof.
std::optional<Witness> oracle_search(const AggregationFunction& a, const AggregationFunction& b, int resolution = 200,
                                     double tol = 1e-9, int threads = 1);

/// Verdict of the quantified weight characterization for a quasi-linear pair
/// with finite endpoint values and strictly monotone composite.
struct WeightGridDiagnostic {
  bool applicable = false;
  ShapeInfo composite_shape;
  /// Theorem-level claims: admissible for every w1 < w2 (resp. w1 > w2).
  bool all_lower = false;
  bool all_upper = false;
  /// Oracle corroboration over sampled weights: pairs checked and pairs
  /// where a witness was found.
  int sampled = 0;
  int lower_witnesses = 0;
  int upper_witnesses = 0;
};

/// Samples w1 != w2 from {1/(k+1), ..., k/(k+1)} and runs the oracle on each
/// pair at the given resolution. The claims never feed back into check_pair.
WeightGridDiagnostic weight_grid_diagnostic(const Generator& f, const Generator& g, int weight_steps = 4,
                                            int resolution = 60);

}  // namespace intorder
