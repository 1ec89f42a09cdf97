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

#include "intorder/h_function.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace intorder {

namespace {
constexpr double kZeroTol = 1e-12;
constexpr double kHoldTol = 1e-9;
}  // namespace

double h_function(double x, double t1, double t2, double v1, double v2, const RealMap& h) {
  if (!(t1 < t2)) throw std::invalid_argument("h_function: requires t1 < t2");
  const double span = t2 - t1;
  if (!(x >= 0.0 && x <= span * (1.0 + 1e-12))) {
    throw std::invalid_argument("h_function: x must lie in [0, t2 - t1]");
  }
  return (1.0 - v2) * (h(t1 + v1 * x) - h(t1)) + v2 * (h(t2 - (1.0 - v1) * x) - h(t2));
}

Adm2Result adm2_scan(const RealMap& h, double lo, double hi, double v1, double v2, int resolution) {
  if (resolution < 16) throw std::invalid_argument("adm2_scan: resolution must be at least 16");
  if (!(lo < hi)) throw std::invalid_argument("adm2_scan: empty domain");

  const int n = resolution;
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);

  std::vector<double> row(static_cast<std::size_t>(n));
  int first_sign = 0;
  bool any_strict = false;
  double min_abs = INFINITY;
  Adm2Result first_sample;
  bool have_first = false;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double t1 = t[i];
      const double t2 = t[j];
      const double span = t2 - t1;
      for (int k = 1; k <= n; ++k) {
        row[k - 1] = h_function(span * k / n, t1, t2, v1, v2, h);
      }
      for (int k = 1; k <= n; ++k) {
        const double v = row[k - 1];
        const double x = span * k / n;
        if (!have_first) {
          first_sample = {Adm2Status::FailsAt, x, t1, t2, v};
          have_first = true;
        }
        if (!std::isfinite(v)) return {Adm2Status::Inconclusive, x, t1, t2, v};
        const double a = std::abs(v);
        min_abs = std::min(min_abs, a);
        if (a >= kZeroTol) {
          const int s = v > 0 ? 1 : -1;
          any_strict = true;
          if (first_sign == 0) {
            first_sign = s;
          } else if (s != first_sign) {
            return {Adm2Status::FailsAt, x, t1, t2, v};
          }
          continue;
        }
        const bool left_flat = k == 1 || std::abs(row[k - 2]) < kHoldTol;
        const bool right_flat = k == n || std::abs(row[k]) < kHoldTol;
        if (left_flat && right_flat && any_strict) return {Adm2Status::FailsAt, x, t1, t2, v};
      }
    }
  }
  if (!any_strict) return first_sample;
  if (min_abs >= kHoldTol) return {Adm2Status::Holds, 0.0, 0.0, 0.0, 0.0};
  return {Adm2Status::Inconclusive, 0.0, 0.0, 0.0, 0.0};
}

bool adm2_concave_slope_test(double slope_at_a, double slope_at_b, double v1, double v2) {
  const double factor = (1.0 - v1) * v2 / ((1.0 - v2) * v1);
  return slope_at_a < factor * slope_at_b;
}

}  // namespace intorder
