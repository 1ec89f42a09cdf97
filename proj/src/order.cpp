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

#include "intorder/order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace intorder {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "Equal";
}

TotalOrderSpec TotalOrderSpec::alpha_beta(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("(alpha, beta)-order: parameters must lie in [0, 1]");
  }
  if (alpha == beta) throw std::invalid_argument("(alpha, beta)-order: alpha and beta must differ");
  TotalOrderSpec spec(AggregationFunction::k_projection(alpha), AggregationFunction::k_projection(beta));
  spec.alpha_ = alpha;
  spec.beta_ = beta;
  return spec;
}

TotalOrderSpec TotalOrderSpec::generated(AggregationFunction a, AggregationFunction b, const CheckOptions& opts) {
  AdmissibilityVerdict v = check_pair({a, b}, opts);
  if (v.outcome == Outcome::NotAdmissible) {
    throw std::invalid_argument("pair (" + a.name() + ", " + b.name() + ") is not admissible (" + v.rule + ")");
  }
  TotalOrderSpec spec(std::move(a), std::move(b));
  spec.verdict_ = std::move(v);
  return spec;
}

TotalOrderSpec TotalOrderSpec::generated_unchecked(AggregationFunction a, AggregationFunction b) {
  return {std::move(a), std::move(b)};
}

OrderKey TotalOrderSpec::key(const Interval& z) const {
  if (alpha_) return {k_projection(*alpha_, z), k_projection(*beta_, z)};
  return {a_(z), b_(z)};
}

std::string TotalOrderSpec::name() const {
  std::ostringstream os;
  if (alpha_) {
    os << "(" << *alpha_ << ", " << *beta_ << ")-order";
  } else {
    os << "order generated by (" << a_.name() << ", " << b_.name() << ")";
  }
  return os.str();
}

Ordering compare_keys(const OrderKey& p, const OrderKey& q) {
  auto cmp = [](double s, double t) {
    if (std::abs(s - t) <= kOrderTieTol) return Ordering::Equal;
    return s < t ? Ordering::Less : Ordering::Greater;
  };
  const Ordering first = cmp(p.primary, q.primary);
  return first != Ordering::Equal ? first : cmp(p.secondary, q.secondary);
}

Ordering compare(const TotalOrderSpec& spec, const Interval& u, const Interval& x) {
  return compare_keys(spec.key(u), spec.key(x));
}

std::vector<std::size_t> rank_indices(const TotalOrderSpec& spec, const std::vector<Interval>& items) {
  std::vector<OrderKey> keys;
  keys.reserve(items.size());
  for (const auto& z : items) keys.push_back(spec.key(z));
  std::vector<std::size_t> idx(items.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return compare_keys(keys[i], keys[j]) == Ordering::Less; });
  return idx;
}

std::vector<Interval> sort_intervals(const TotalOrderSpec& spec, const std::vector<Interval>& items) {
  std::vector<Interval> out;
  out.reserve(items.size());
  for (std::size_t i : rank_indices(spec, items)) out.push_back(items[i]);
  return out;
}

bool refines_interval_order(const TotalOrderSpec& spec, int resolution) {
  if (resolution < 20) throw std::invalid_argument("refines_interval_order: resolution must be at least 20");
  const auto grid = interval_grid(resolution);
  std::vector<OrderKey> keys;
  keys.reserve(grid.size());
  for (const auto& z : grid) keys.push_back(spec.key(z));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (i == j || interval_partial_compare(grid[i], grid[j]) != PartialComparison::LessOrEqual) continue;
      if (compare_keys(keys[i], keys[j]) == Ordering::Greater) return false;
    }
  }
  return true;
}

}  // namespace intorder
