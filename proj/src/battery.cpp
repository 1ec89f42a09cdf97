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

#include "intorder/battery.hpp"

#include <sstream>

namespace intorder {

namespace {

using AF = AggregationFunction;

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string weights(double w1, double w2) { return "w=(" + num(w1) + "," + num(w2) + ")"; }

struct Builder {
  std::vector<BatteryCase> cases;
  std::string group;

  void add(std::string label, AF a, AF b, Outcome expected) {
    cases.push_back({group, std::move(label), {std::move(a), std::move(b)}, expected});
  }
};

constexpr Outcome kYes = Outcome::Admissible;
constexpr Outcome kNo = Outcome::NotAdmissible;

}  // namespace

std::vector<BatteryCase> reference_battery() {
  Builder b;

  // Power means against power means.
  auto wrm = [&](double a, double w1, double c, double w2, Outcome e) {
    b.add("(WRM^" + num(a) + ", WRM^" + num(c) + ") " + weights(w1, w2), AF::wrm(a, w1), AF::wrm(c, w2), e);
  };
  b.group = "wrm: both exponents negative";
  wrm(-1, 0.5, -2, 0.5, kNo);
  wrm(-0.5, 0.3, -3, 0.7, kNo);
  wrm(-2, 0.7, -1, 0.3, kNo);
  b.group = "wrm: equal weights, distinct exponents, one positive";
  wrm(2, 0.5, 3, 0.5, kYes);
  wrm(-1, 0.4, 2, 0.4, kYes);
  wrm(0.5, 0.6, -2, 0.6, kYes);
  wrm(1, 0.5, 2, 0.5, kYes);
  b.group = "wrm: equal weights, equal exponents";
  wrm(2, 0.5, 2, 0.5, kNo);
  wrm(0.5, 0.3, 0.5, 0.3, kNo);
  wrm(3, 0.7, 3, 0.7, kNo);
  b.group = "wrm: w1 < w2, alpha < 0 < beta";
  wrm(-1, 0.3, 2, 0.7, kYes);
  wrm(-2, 0.2, 0.5, 0.6, kYes);
  wrm(-0.5, 0.4, 1, 0.9, kYes);
  b.group = "wrm: w1 < w2, 0 < alpha <= beta";
  wrm(1, 0.3, 2, 0.7, kYes);
  wrm(2, 0.2, 2, 0.8, kYes);
  wrm(0.5, 0.1, 3, 0.5, kYes);
  b.group = "wrm: w1 > w2, beta < 0 < alpha";
  wrm(2, 0.7, -1, 0.3, kYes);
  wrm(0.5, 0.6, -2, 0.2, kYes);
  wrm(1, 0.9, -0.5, 0.4, kYes);
  b.group = "wrm: w1 > w2, 0 < beta <= alpha";
  wrm(2, 0.7, 1, 0.3, kYes);
  wrm(2, 0.8, 2, 0.2, kYes);
  wrm(3, 0.5, 0.5, 0.1, kYes);

  // Exponential means against exponential means.
  auto wem = [&](double a, double w1, double c, double w2, Outcome e) {
    b.add("(WEM^" + num(a) + ", WEM^" + num(c) + ") " + weights(w1, w2), AF::wem(a, w1), AF::wem(c, w2), e);
  };
  b.group = "wem: equal weights, distinct exponents";
  wem(1, 0.5, 2, 0.5, kYes);
  wem(-1, 0.3, 1, 0.3, kYes);
  wem(-2, 0.7, -0.5, 0.7, kYes);
  b.group = "wem: w1 < w2, alpha <= beta";
  wem(1, 0.3, 2, 0.7, kYes);
  wem(-1, 0.2, 1, 0.6, kYes);
  wem(-2, 0.4, -2, 0.9, kYes);
  b.group = "wem: w1 > w2, alpha >= beta";
  wem(2, 0.7, 1, 0.3, kYes);
  wem(1, 0.6, -1, 0.2, kYes);
  wem(-0.5, 0.9, -0.5, 0.4, kYes);

  // Geometric and logit means against themselves.
  b.group = "wgm self pairs";
  for (auto [w1, w2] : {std::pair{0.3, 0.7}, {0.5, 0.5}, {0.7, 0.2}}) {
    b.add("(WGM, WGM) " + weights(w1, w2), AF::wgm(w1), AF::wgm(w2), kNo);
  }
  b.group = "wm self pairs";
  for (auto [w1, w2] : {std::pair{0.3, 0.7}, {0.5, 0.5}, {0.7, 0.2}}) {
    b.add("(WM, WM) " + weights(w1, w2), AF::wm(w1), AF::wm(w2), kNo);
  }

  // Mixed families.
  b.group = "(WGM, WEM): equal weights, alpha >= -1";
  for (double a : {-1.0, -0.5, 1.0, 3.0}) b.add("alpha=" + num(a), AF::wgm(0.5), AF::wem(a, 0.5), kYes);
  b.group = "(WGM, WEM): equal weights, alpha < -1";
  for (double a : {-1.5, -3.0, -5.0}) b.add("alpha=" + num(a), AF::wgm(0.4), AF::wem(a, 0.4), kNo);
  b.group = "(WGM, WEM): w1 < w2, alpha >= -1";
  for (double a : {-1.0, -0.5, 2.0}) b.add("alpha=" + num(a), AF::wgm(0.3), AF::wem(a, 0.7), kYes);
  b.group = "(WM, WEM): equal weights";
  for (double a : {-2.0, 1.0, 3.0}) b.add("alpha=" + num(a), AF::wm(0.5), AF::wem(a, 0.5), kNo);
  b.group = "(WM, WRM): equal weights";
  for (double a : {-1.0, 0.5, 2.0}) b.add("alpha=" + num(a), AF::wm(0.6), AF::wrm(a, 0.6), kNo);
  b.group = "(WM, WRM): unequal weights, alpha < 0";
  b.add("alpha=-0.5 " + weights(0.3, 0.7), AF::wm(0.3), AF::wrm(-0.5, 0.7), kNo);
  b.add("alpha=-1 " + weights(0.7, 0.3), AF::wm(0.7), AF::wrm(-1, 0.3), kNo);
  b.add("alpha=-2 " + weights(0.2, 0.9), AF::wm(0.2), AF::wrm(-2, 0.9), kNo);
  b.group = "(WM, WGM)";
  for (auto [w1, w2] : {std::pair{0.5, 0.5}, {0.3, 0.7}, {0.8, 0.2}}) {
    b.add(weights(w1, w2), AF::wm(w1), AF::wgm(w2), kNo);
  }
  b.group = "(WRM, WGM): w1 >= w2, alpha > 0";
  b.add("alpha=1 " + weights(0.5, 0.5), AF::wrm(1, 0.5), AF::wgm(0.5), kYes);
  b.add("alpha=2 " + weights(0.7, 0.3), AF::wrm(2, 0.7), AF::wgm(0.3), kYes);
  b.add("alpha=0.5 " + weights(0.6, 0.2), AF::wrm(0.5, 0.6), AF::wgm(0.2), kYes);
  b.group = "(WRM, WGM): alpha < 0";
  b.add("alpha=-1 " + weights(0.5, 0.5), AF::wrm(-1, 0.5), AF::wgm(0.5), kNo);
  b.add("alpha=-2 " + weights(0.3, 0.7), AF::wrm(-2, 0.3), AF::wgm(0.7), kNo);
  b.add("alpha=-0.5 " + weights(0.7, 0.2), AF::wrm(-0.5, 0.7), AF::wgm(0.2), kNo);

  auto wrm_wem = [&](double a, double c, double w1, double w2, Outcome e) {
    b.add("alpha=" + num(a) + " beta=" + num(c) + " " + weights(w1, w2), AF::wrm(a, w1), AF::wem(c, w2), e);
  };
  b.group = "(WRM, WEM): equal weights, alpha < 1 and beta > alpha - 1";
  wrm_wem(0.5, 1, 0.5, 0.5, kYes);
  wrm_wem(-1, 0.5, 0.5, 0.5, kYes);
  wrm_wem(0.5, -0.2, 0.5, 0.5, kYes);
  b.group = "(WRM, WEM): equal weights, alpha > 1 and beta < alpha - 1";
  wrm_wem(3, 1, 0.4, 0.4, kYes);
  wrm_wem(2, -1, 0.4, 0.4, kYes);
  wrm_wem(1.5, 0.2, 0.4, 0.4, kYes);
  b.group = "(WRM, WEM): equal weights, outside both regions";
  wrm_wem(0.5, -1, 0.5, 0.5, kNo);
  wrm_wem(-1, -3, 0.5, 0.5, kNo);
  wrm_wem(3, 3, 0.5, 0.5, kNo);
  wrm_wem(2, 2, 0.5, 0.5, kNo);
  b.group = "(WRM, WEM): w1 < w2, alpha <= 1 and beta >= alpha - 1";
  wrm_wem(0.5, 1, 0.3, 0.7, kYes);
  wrm_wem(1, 0.5, 0.3, 0.7, kYes);
  wrm_wem(-1, -1, 0.3, 0.7, kYes);
  b.group = "(WRM, WEM): w1 > w2, alpha >= 1 and beta <= alpha - 1";
  wrm_wem(2, 0.5, 0.7, 0.3, kYes);
  wrm_wem(1, -1, 0.7, 0.3, kYes);
  wrm_wem(3, 2, 0.7, 0.3, kYes);

  // One instance per row of the unequal-weight table, in both argument orders.
  auto ql = [](Generator f, double w) { return AF::quasi_linear_mean(std::move(f), w); };
  auto table = [&](const std::string& label, Generator f, double w1, Generator g, double w2) {
    b.add(label, ql(f, w1), ql(g, w2), kYes);
    b.add(label + " swapped", ql(g, w2), ql(f, w1), kYes);
  };
  b.group = "unequal-weight table";
  table("w1<w2, f up, h convex up", Generator::identity(), 0.3, Generator::power(2), 0.7);
  table("w1<w2, f up, h concave down", Generator::logarithm(), 0.3, Generator::one_minus(), 0.7);
  table("w1<w2, f down, h convex down", Generator::one_minus(), 0.3, Generator::power(2), 0.7);
  table("w1<w2, f down, h concave up", Generator::exponential(-1), 0.3, Generator::exponential(-0.5), 0.7);
  table("w1>w2, f up, h convex down", Generator::identity(), 0.7, Generator::exponential(-1), 0.3);
  table("w1>w2, f up, h concave up", Generator::identity(), 0.7, Generator::power(0.5), 0.3);
  table("w1>w2, f down, h convex up", Generator::exponential(-1), 0.7, Generator::exponential(-2), 0.3);
  table("w1>w2, f down, h concave down", Generator::one_minus(), 0.7, Generator::power(0.5), 0.3);

  // Archimedean t-norms with t-conorms.
  const AdditiveGeneratorTNorm product(Generator::negated_log());
  const AdditiveGeneratorTNorm lukasiewicz(Generator::one_minus());
  const AdditiveGeneratorTConorm probabilistic(Generator::neg_log_complement());
  const AdditiveGeneratorTConorm bounded(Generator::identity());
  const AdditiveGeneratorTConorm bounded_sq(Generator::power(2));
  b.group = "t-norm with t-conorm: both strict";
  b.add("(product, probabilistic sum)", AF::tnorm(product), AF::tconorm(probabilistic), kYes);
  b.group = "t-norm with t-conorm: nilpotent member";
  b.add("(Lukasiewicz, bounded sum)", AF::tnorm(lukasiewicz), AF::tconorm(bounded), kNo);
  b.add("(product, bounded sum)", AF::tnorm(product), AF::tconorm(bounded), kNo);
  b.add("(Lukasiewicz, probabilistic sum)", AF::tnorm(lukasiewicz), AF::tconorm(probabilistic), kNo);
  b.add("(product, s = x^2)", AF::tnorm(product), AF::tconorm(bounded_sq), kNo);

  // Pairs of Schur means 0.5 (f(u1) + f(u2)).
  auto schur = [](double gamma) { return AF::schur_pair_mean(Generator::power(gamma)); };
  b.group = "schur pairs";
  b.add("(x^2, sqrt x)", schur(2), schur(0.5), kYes);
  b.add("(x, x^2)", AF::k_projection(0.5), schur(2), kYes);
  b.add("(x^3, x^2)", schur(3), schur(2), kYes);
  b.add("(x^2, x^2)", schur(2), schur(2), kNo);

  // Projection pairs.
  b.group = "projections";
  b.add("(K_0.3, K_0.7)", AF::k_projection(0.3), AF::k_projection(0.7), kYes);
  b.add("(K_0, K_1)", AF::k_projection(0), AF::k_projection(1), kYes);
  b.add("(K_1, K_0.5)", AF::k_projection(1), AF::k_projection(0.5), kYes);
  b.add("(K_0, product)", AF::k_projection(0), AF::tnorm(product), kNo);
  b.add("(K_0.4, K_0.4)", AF::k_projection(0.4), AF::k_projection(0.4), kNo);

  return std::move(b.cases);
}

std::vector<BatteryRow> run_battery(const std::vector<BatteryCase>& cases, const CheckOptions& opts) {
  std::vector<BatteryRow> rows;
  rows.reserve(cases.size());
  for (const auto& c : cases) rows.push_back({c, check_pair(c.pair, opts)});
  return rows;
}

}  // namespace intorder
