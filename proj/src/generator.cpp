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

#include "intorder/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace intorder {

namespace {

std::string with_param(const char* base, double gamma) {
  std::ostringstream os;
  os << base << '(' << gamma << ')';
  return os.str();
}

void require_nonzero(double gamma, const char* what) {
  if (gamma == 0.0 || !std::isfinite(gamma)) {
    throw std::invalid_argument(std::string(what) + ": gamma must be finite and non-zero");
  }
}

}  // namespace

Generator Generator::identity() {
  Generator g;
  g.kind_ = GeneratorKind::Identity;
  g.at_zero_ = 0.0;
  g.at_one_ = 1.0;
  g.name_ = "identity";
  return g;
}

Generator Generator::power(double gamma) {
  require_nonzero(gamma, "power");
  Generator g;
  g.kind_ = GeneratorKind::Power;
  g.gamma_ = gamma;
  g.direction_ = gamma > 0 ? Direction::Increasing : Direction::Decreasing;
  g.at_zero_ = gamma > 0 ? ExtendedReal{0.0} : ExtendedReal::pos_inf();
  g.at_one_ = 1.0;
  g.name_ = with_param("power", gamma);
  return g;
}

Generator Generator::exponential(double gamma) {
  require_nonzero(gamma, "exponential");
  Generator g;
  g.kind_ = GeneratorKind::Exponential;
  g.gamma_ = gamma;
  g.direction_ = gamma > 0 ? Direction::Increasing : Direction::Decreasing;
  g.at_zero_ = 1.0;
  g.at_one_ = std::exp(gamma);
  g.name_ = with_param("exponential", gamma);
  return g;
}

Generator Generator::logarithm() {
  Generator g;
  g.kind_ = GeneratorKind::Logarithm;
  g.at_zero_ = ExtendedReal::neg_inf();
  g.at_one_ = 0.0;
  g.name_ = "logarithm";
  return g;
}

Generator Generator::logit() {
  Generator g;
  g.kind_ = GeneratorKind::Logit;
  g.at_zero_ = ExtendedReal::neg_inf();
  g.at_one_ = ExtendedReal::pos_inf();
  g.name_ = "logit";
  return g;
}

Generator Generator::negated_log() {
  Generator g;
  g.kind_ = GeneratorKind::NegatedLog;
  g.direction_ = Direction::Decreasing;
  g.at_zero_ = ExtendedReal::pos_inf();
  g.at_one_ = 0.0;
  g.name_ = "negated_log";
  return g;
}

Generator Generator::one_minus() {
  Generator g;
  g.kind_ = GeneratorKind::OneMinus;
  g.direction_ = Direction::Decreasing;
  g.at_zero_ = 1.0;
  g.at_one_ = 0.0;
  g.name_ = "one_minus";
  return g;
}

Generator Generator::neg_log_complement() {
  Generator g;
  g.kind_ = GeneratorKind::NegLogComplement;
  g.at_zero_ = 0.0;
  g.at_one_ = ExtendedReal::pos_inf();
  g.name_ = "neg_log_complement";
  return g;
}

Generator Generator::custom(std::string name, Fn eval, Fn inverse, Direction direction) {
  if (!eval || !inverse) throw std::invalid_argument("custom generator needs eval and inverse");
  Generator g;
  g.kind_ = GeneratorKind::Custom;
  g.direction_ = direction;
  g.at_zero_ = eval(0.0);
  g.at_one_ = eval(1.0);
  g.name_ = std::move(name);
  g.custom_eval_ = std::make_shared<const Fn>(std::move(eval));
  g.custom_inverse_ = std::make_shared<const Fn>(std::move(inverse));
  if (auto why = generator_violation(g)) {
    throw std::invalid_argument("generator '" + g.name_ + "' rejected: " + *why);
  }
  return g;
}

const std::vector<std::string>& Generator::builtin_kind_names() {
  static const std::vector<std::string> names = {
      "identity", "power", "exponential", "logarithm", "logit", "negated_log", "one_minus", "neg_log_complement"};
  return names;
}

ExtendedReal Generator::operator()(double x) const {
  switch (kind_) {
    case GeneratorKind::Identity:
      return x;
    case GeneratorKind::Power:
      if (x == 0.0) return at_zero_;
      return std::pow(x, gamma_);
    case GeneratorKind::Exponential:
      return std::exp(gamma_ * x);
    case GeneratorKind::Logarithm:
      if (x == 0.0) return ExtendedReal::neg_inf();
      return std::log(x);
    case GeneratorKind::Logit:
      if (x == 0.0) return ExtendedReal::neg_inf();
      if (x == 1.0) return ExtendedReal::pos_inf();
      return std::log(x) - std::log1p(-x);
    case GeneratorKind::NegatedLog:
      if (x == 0.0) return ExtendedReal::pos_inf();
      return -std::log(x);
    case GeneratorKind::OneMinus:
      return 1.0 - x;
    case GeneratorKind::NegLogComplement:
      if (x == 1.0) return ExtendedReal::pos_inf();
      return -std::log1p(-x);
    case GeneratorKind::Custom:
      return (*custom_eval_)(x);
  }
  return 0.0;
}

double Generator::inverse(ExtendedReal y) const {
  // Values at or beyond an end of the range go to that end of [0, 1].
  const ExtendedReal lo_val = increasing() ? at_zero_ : at_one_;
  const ExtendedReal hi_val = increasing() ? at_one_ : at_zero_;
  if (y <= lo_val) return increasing() ? 0.0 : 1.0;
  if (y >= hi_val) return increasing() ? 1.0 : 0.0;

  const double v = y.value();
  double x = 0.0;
  switch (kind_) {
    case GeneratorKind::Identity:
      x = v;
      break;
    case GeneratorKind::Power:
      x = std::pow(v, 1.0 / gamma_);
      break;
    case GeneratorKind::Exponential:
      x = std::log(v) / gamma_;
      break;
    case GeneratorKind::Logarithm:
      x = std::exp(v);
      break;
    case GeneratorKind::Logit:
      x = 1.0 / (1.0 + std::exp(-v));
      break;
    case GeneratorKind::NegatedLog:
      x = std::exp(-v);
      break;
    case GeneratorKind::OneMinus:
      x = 1.0 - v;
      break;
    case GeneratorKind::NegLogComplement:
      x = -std::expm1(-v);
      break;
    case GeneratorKind::Custom:
      x = (*custom_inverse_)(v);
      break;
  }
  return std::clamp(x, 0.0, 1.0);
}

std::optional<CurvatureNumerator> Generator::curvature_numerator() const {
  switch (kind_) {
    case GeneratorKind::Identity:
    case GeneratorKind::OneMinus:
      return CurvatureNumerator{};
    case GeneratorKind::Power:
      return CurvatureNumerator{gamma_ - 1.0, -(gamma_ - 1.0), 0.0};
    case GeneratorKind::Exponential:
      return CurvatureNumerator{0.0, gamma_, -gamma_};
    case GeneratorKind::Logarithm:
    case GeneratorKind::NegatedLog:
      return CurvatureNumerator{-1.0, 1.0, 0.0};
    case GeneratorKind::Logit:
      return CurvatureNumerator{-1.0, 2.0, 0.0};
    case GeneratorKind::NegLogComplement:
      return CurvatureNumerator{0.0, 1.0, 0.0};
    case GeneratorKind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::string> generator_violation(const Generator& f, int samples) {
  std::ostringstream why;
  double prev = 0.0;
  for (int i = 1; i < samples; ++i) {
    const double x = static_cast<double>(i) / samples;
    const ExtendedReal y = f(x);
    if (!y.is_finite()) {
      why << "value at interior point " << x << " is not finite";
      return why.str();
    }
    if (i > 1) {
      const bool up = y.value() > prev;
      const bool down = y.value() < prev;
      if ((f.increasing() && !up) || (!f.increasing() && !down)) {
        why << "not strictly " << (f.increasing() ? "increasing" : "decreasing") << " near x = " << x;
        return why.str();
      }
    }
    prev = y.value();
    const double back = f.inverse(y);
    if (std::abs(back - x) > 1e-9) {
      why << "inverse round trip fails at x = " << x << " (got " << back << ")";
      return why.str();
    }
  }
  const ExtendedReal first = f(1.0 / samples);
  const ExtendedReal last = f(1.0 - 1.0 / samples);
  const bool endpoints_ok = f.increasing() ? (f.at_zero() <= first && last <= f.at_one())
                                           : (f.at_zero() >= first && last >= f.at_one());
  if (!endpoints_ok) return std::string("endpoint values are inconsistent with the direction");
  return std::nullopt;
}

}  // namespace intorder
