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

#include "intorder/shape.hpp"

namespace intorder {

/// H(x, t1, t2) = (1 - v2)(h(t1 + v1 x) - h(t1)) + v2 (h(t2 - (1 - v1) x) - h(t2)).
///
/// The pair of weighted projections (K_v1 on (s1, s2), K_v2 on (h(s1), h(s2)))
/// collides for two distinct pairs exactly when H has a zero with
/// x in (0, t2 - t1]. Throws std::invalid_argument unless t1 < t2 and
/// 0 <= x <= t2 - t1.
double h_function(double x, double t1, double t2, double v1, double v2, const RealMap& h);

enum class Adm2Status { Holds, FailsAt, Inconclusive };

struct Adm2Result {
  Adm2Status status = Adm2Status::Inconclusive;
  // Sample where the failure was detected (FailsAt only).
  double x = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double value = 0.0;
};

/// Grid scan for zeros of H over t1 < t2 in [lo, hi] (resolution points per
/// axis) and x = k (t2 - t1) / resolution, k = 1..resolution.
///
/// FailsAt when H takes both signs (|H| >= 1e-12), when H vanishes on every
/// sample, or when |H| < 1e-12 at a sample whose x-neighbours are below 1e-9.
/// Holds when every sample has |H| >= 1e-9 and a common sign. Inconclusive
/// otherwise. The first failing sample in lexicographic (t1, t2, x) order is
/// reported. Requires resolution >= 16.
Adm2Result adm2_scan(const RealMap& h, double lo, double hi, double v1, double v2, int resolution);

/// Sufficient test for strictly concave, differentiable h on [a, b]:
/// h'(a) < (1 - v1) v2 / ((1 - v2) v1) * h'(b). The derivative of H at x = 0
/// is then negative for every (t1, t2), so H < 0 throughout.
bool adm2_concave_slope_test(double slope_at_a, double slope_at_b, double v1, double v2);

}  // namespace intorder
