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

#include "intorder/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace intorder {

namespace {

constexpr double kClampSlack = 1e-15;

double clamp_endpoint(double v) {
  if (std::isnan(v)) throw std::invalid_argument("interval endpoint is NaN");
  if (v < 0.0 && v >= -kClampSlack) return 0.0;
  if (v > 1.0 && v <= 1.0 + kClampSlack) return 1.0;
  if (v < 0.0 || v > 1.0) {
    std::ostringstream msg;
    msg << "interval endpoint " << v << " lies outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
  return v;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(clamp_endpoint(lo)), hi_(clamp_endpoint(hi)) {
  if (lo_ > hi_) {
    std::ostringstream msg;
    msg << "interval [" << lo << ", " << hi << "] has lo > hi";
    throw std::invalid_argument(msg.str());
  }
}

std::strong_ordering lex_compare(const Interval& a, const Interval& b) {
  if (a.lo_ < b.lo_) return std::strong_ordering::less;
  if (a.lo_ > b.lo_) return std::strong_ordering::greater;
  if (a.hi_ < b.hi_) return std::strong_ordering::less;
  if (a.hi_ > b.hi_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double k_projection(double w, const Interval& z) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("k_projection: weight must lie in [0, 1]");
  }
  // Written as lo + w*(hi - lo) so that the result stays inside [lo, hi]
  // and K_w([a, a]) == a exactly.
  const double v = z.lo() + w * (z.hi() - z.lo());
  return std::clamp(v, z.lo(), z.hi());
}

PartialComparison interval_partial_compare(const Interval& u, const Interval& x) {
  const bool le = u.lo() <= x.lo() && u.hi() <= x.hi();
  const bool ge = u.lo() >= x.lo() && u.hi() >= x.hi();
  if (le && ge) return PartialComparison::Equal;
  if (le) return PartialComparison::LessOrEqual;
  if (ge) return PartialComparison::GreaterOrEqual;
  return PartialComparison::Incomparable;
}

double endpoint_distance(const Interval& u, const Interval& x) {
  return std::max(std::abs(u.lo() - x.lo()), std::abs(u.hi() - x.hi()));
}

std::vector<Interval> interval_grid(int n) {
  if (n < 1) throw std::invalid_argument("interval_grid: n must be positive");
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      out.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
    }
  }
  return out;
}

}  // namespace intorder
