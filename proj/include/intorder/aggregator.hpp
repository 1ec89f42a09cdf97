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
#include <optional>
#include <string>
#include <variant>

#include "intorder/generator.hpp"
#include "intorder/interval.hpp"

namespace intorder {

enum class ArchimedeanKind { Strict, Nilpotent };

/// Additive generator t of an Archimedean t-norm: decreasing, t(1) = 0,
/// t(0) in (0, +inf]. Strict iff t(0) is infinite.
class AdditiveGeneratorTNorm {
 public:
  /// Throws std::invalid_argument when t violates the conditions above.
  explicit AdditiveGeneratorTNorm(Generator t);

  const Generator& generator() const { return t_; }
  ArchimedeanKind kind() const { return kind_; }

 private:
  Generator t_;
  ArchimedeanKind kind_;
};

/// Additive generator s of an Archimedean t-conorm: increasing, s(0) = 0,
/// s(1) in (0, +inf]. Strict iff s(1) is infinite.
class AdditiveGeneratorTConorm {
 public:
  explicit AdditiveGeneratorTConorm(Generator s);

  const Generator& generator() const { return s_; }
  ArchimedeanKind kind() const { return kind_; }

 private:
  Generator s_;
  ArchimedeanKind kind_;
};

double tnorm_eval(const AdditiveGeneratorTNorm& t, const Interval& u);
double tconorm_eval(const AdditiveGeneratorTConorm& s, const Interval& u);

struct KProjectionDesc {
  double w;
};

struct QuasiLinearDesc {
  Generator f;
  double w;
};

/// A(u) = 0.5 (f(u.lo) + f(u.hi)) for an increasing bijection f of [0, 1].
struct SchurPairDesc {
  Generator f;
};

struct CustomDesc {
  std::string name;
};

using AggregatorDescriptor = std::variant<KProjectionDesc, QuasiLinearDesc, SchurPairDesc, AdditiveGeneratorTNorm,
                                          AdditiveGeneratorTConorm, CustomDesc>;

/// An aggregation function on intervals together with the family it came
/// from. The descriptor is what the admissibility rules dispatch on; custom
/// functions only ever reach the numerical oracle.
class AggregationFunction {
 public:
  using Fn = std::function<double(double, double)>;

  /// K_w for w in [0, 1].
  static AggregationFunction k_projection(double w);
  /// f^-1((1 - w) f(lo) + w f(hi)) for 0 < w < 1.
  static AggregationFunction quasi_linear_mean(Generator f, double w);
  /// Requires f increasing with f(0) = 0 and f(1) = 1 (within 1e-12).
  static AggregationFunction schur_pair_mean(Generator f);
  static AggregationFunction tnorm(AdditiveGeneratorTNorm t);
  static AggregationFunction tconorm(AdditiveGeneratorTConorm s);
  /// An arbitrary evaluatable function of (lo, hi). Boundary conditions are
  /// not checked here; see aggregation_violation.
  static AggregationFunction custom(std::string name, Fn fn);

  static AggregationFunction wrm(double gamma, double w) { return quasi_linear_mean(Generator::power(gamma), w); }
  static AggregationFunction wem(double gamma, double w) { return quasi_linear_mean(Generator::exponential(gamma), w); }
  static AggregationFunction wgm(double w) { return quasi_linear_mean(Generator::logarithm(), w); }
  static AggregationFunction wm(double w) { return quasi_linear_mean(Generator::logit(), w); }

  double operator()(const Interval& z) const;
  double operator()(double lo, double hi) const;

  const AggregatorDescriptor& descriptor() const { return desc_; }
  const std::string& name() const { return name_; }

 private:
  AggregationFunction(AggregatorDescriptor desc, std::string name, Fn custom = {});

  AggregatorDescriptor desc_;
  std::string name_;
  Fn custom_;
};

/// Checks A([0,0]) = 0, A([1,1]) = 1 and monotonicity on the grid of
/// intervals with step 1/n. Returns a description of the first violation.
std::optional<std::string> aggregation_violation(const AggregationFunction& a, int n = 100);

}  // namespace intorder
