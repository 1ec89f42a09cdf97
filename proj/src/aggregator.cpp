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

#include "intorder/aggregator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace intorder {

namespace {

constexpr double kBoundaryTol = 1e-12;

std::string weighted_name(const std::string& base, double w) {
  std::ostringstream os;
  os << base << "[w=" << w << ']';
  return os.str();
}

double quasi_linear_eval(const Generator& f, double w, double lo, double hi) {
  if (lo == hi) return lo;
  double v = 0.0;
  switch (f.kind()) {
    case GeneratorKind::Identity:
      v = lo + w * (hi - lo);
      break;
    case GeneratorKind::Logarithm:
      v = lo == 0.0 ? 0.0 : std::pow(lo, 1.0 - w) * std::pow(hi, w);
      break;
    case GeneratorKind::Logit: {
      const double num = std::pow(lo, 1.0 - w) * std::pow(hi, w);
      const double den = num + std::pow(1.0 - lo, 1.0 - w) * std::pow(1.0 - hi, w);
      v = den == 0.0 ? 0.0 : num / den;  // 0/0 = 0
      break;
    }
    default:
      v = f.inverse((1.0 - w) * f(lo) + w * f(hi));
      break;
  }
  return std::clamp(v, lo, hi);
}

}  // namespace

AdditiveGeneratorTNorm::AdditiveGeneratorTNorm(Generator t) : t_(std::move(t)), kind_(ArchimedeanKind::Strict) {
  if (t_.increasing()) throw std::invalid_argument("t-norm generator must be decreasing");
  if (!t_.at_one().is_finite() || std::abs(t_.at_one().value()) > kBoundaryTol) {
    throw std::invalid_argument("t-norm generator must satisfy t(1) = 0");
  }
  if (!(t_.at_zero() > ExtendedReal{0.0})) throw std::invalid_argument("t-norm generator must satisfy t(0) > 0");
  kind_ = t_.at_zero().is_finite() ? ArchimedeanKind::Nilpotent : ArchimedeanKind::Strict;
}

AdditiveGeneratorTConorm::AdditiveGeneratorTConorm(Generator s) : s_(std::move(s)), kind_(ArchimedeanKind::Strict) {
  if (!s_.increasing()) throw std::invalid_argument("t-conorm generator must be increasing");
  if (!s_.at_zero().is_finite() || std::abs(s_.at_zero().value()) > kBoundaryTol) {
    throw std::invalid_argument("t-conorm generator must satisfy s(0) = 0");
  }
  if (!(s_.at_one() > ExtendedReal{0.0})) throw std::invalid_argument("t-conorm generator must satisfy s(1) > 0");
  kind_ = s_.at_one().is_finite() ? ArchimedeanKind::Nilpotent : ArchimedeanKind::Strict;
}

double tnorm_eval(const AdditiveGeneratorTNorm& t, const Interval& u) {
  const Generator& g = t.generator();
  const double v = g.inverse(ext_min(g(u.lo()) + g(u.hi()), g.at_zero()));
  return std::min(v, u.lo());
}

double tconorm_eval(const AdditiveGeneratorTConorm& s, const Interval& u) {
  const Generator& g = s.generator();
  const double v = g.inverse(ext_min(g(u.lo()) + g(u.hi()), g.at_one()));
  return std::max(v, u.hi());
}

AggregationFunction::AggregationFunction(AggregatorDescriptor desc, std::string name, Fn custom)
    : desc_(std::move(desc)), name_(std::move(name)), custom_(std::move(custom)) {}

AggregationFunction AggregationFunction::k_projection(double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("K_w: weight must lie in [0, 1]");
  std::ostringstream os;
  os << "K_" << w;
  return {KProjectionDesc{w}, os.str()};
}

AggregationFunction AggregationFunction::quasi_linear_mean(Generator f, double w) {
  if (!(w > 0.0 && w < 1.0)) throw std::invalid_argument("quasi-linear mean: weight must lie in (0, 1)");
  std::string name = weighted_name("QL<" + f.name() + ">", w);
  return {QuasiLinearDesc{std::move(f), w}, std::move(name)};
}

AggregationFunction AggregationFunction::schur_pair_mean(Generator f) {
  if (!f.increasing()) throw std::invalid_argument("schur pair mean: f must be increasing");
  const bool zero_ok = f.at_zero().is_finite() && std::abs(f.at_zero().value()) <= kBoundaryTol;
  const bool one_ok = f.at_one().is_finite() && std::abs(f.at_one().value() - 1.0) <= kBoundaryTol;
  if (!zero_ok || !one_ok) throw std::invalid_argument("schur pair mean: f must satisfy f(0) = 0 and f(1) = 1");
  std::string name = "Schur<" + f.name() + ">";
  return {SchurPairDesc{std::move(f)}, std::move(name)};
}

AggregationFunction AggregationFunction::tnorm(AdditiveGeneratorTNorm t) {
  std::string name = "T<" + t.generator().name() + ">";
  return {std::move(t), std::move(name)};
}

AggregationFunction AggregationFunction::tconorm(AdditiveGeneratorTConorm s) {
  std::string name = "S<" + s.generator().name() + ">";
  return {std::move(s), std::move(name)};
}

AggregationFunction AggregationFunction::custom(std::string name, Fn fn) {
  if (!fn) throw std::invalid_argument("custom aggregation function needs a callable");
  CustomDesc desc{name};
  return {std::move(desc), std::move(name), std::move(fn)};
}

double AggregationFunction::operator()(const Interval& z) const {
  struct Visitor {
    const Interval& z;
    const AggregationFunction& self;
    double operator()(const KProjectionDesc& d) const { return intorder::k_projection(d.w, z); }
    double operator()(const QuasiLinearDesc& d) const { return quasi_linear_eval(d.f, d.w, z.lo(), z.hi()); }
    double operator()(const SchurPairDesc& d) const {
      const double v = 0.5 * (d.f(z.lo()).value() + d.f(z.hi()).value());
      return std::clamp(v, 0.0, 1.0);
    }
    double operator()(const AdditiveGeneratorTNorm& t) const { return tnorm_eval(t, z); }
    double operator()(const AdditiveGeneratorTConorm& s) const { return tconorm_eval(s, z); }
    double operator()(const CustomDesc&) const { return self.custom_(z.lo(), z.hi()); }
  };
  return std::visit(Visitor{z, *this}, desc_);
}

double AggregationFunction::operator()(double lo, double hi) const { return (*this)(Interval(lo, hi)); }

std::optional<std::string> aggregation_violation(const AggregationFunction& a, int n) {
  if (std::abs(a(0.0, 0.0)) > kBoundaryTol) return std::string("A([0,0]) != 0");
  if (std::abs(a(1.0, 1.0) - 1.0) > kBoundaryTol) return std::string("A([1,1]) != 1");
  // Componentwise order is generated by the unit steps in lo and in hi.
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const double lo = static_cast<double>(i) / n;
      const double hi = static_cast<double>(j) / n;
      const double v = a(lo, hi);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << "value " << v << " at [" << lo << ", " << hi << "] outside [0, 1]";
        return os.str();
      }
      const bool up_hi = j < n && a(lo, static_cast<double>(j + 1) / n) < v - kBoundaryTol;
      const bool up_lo = i < j && a(static_cast<double>(i + 1) / n, hi) < v - kBoundaryTol;
      if (up_hi || up_lo) {
        std::ostringstream os;
        os << "not monotone at [" << lo << ", " << hi << "]";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace intorder
