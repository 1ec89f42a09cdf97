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
#include <string_view>

#include "intorder/extended_real.hpp"
#include "intorder/generator.hpp"

namespace intorder {

using RealMap = std::function<double(double)>;

enum class Convexity { StrictlyConvex, Convex, Affine, Concave, StrictlyConcave, Mixed, Unknown };
enum class Monotonicity { StrictlyIncreasing, StrictlyDecreasing, NonMonotone, Unknown };

struct ShapeInfo {
  Convexity convexity = Convexity::Unknown;
  Monotonicity monotonicity = Monotonicity::Unknown;
  /// True when the convexity class was derived analytically. Only closed-form
  /// results can be strict.
  bool closed_form = false;
};

/// Affine counts as both convex and concave; strict classes imply the weak ones.
bool is_convex(Convexity c);
bool is_concave(Convexity c);
bool is_strict(Convexity c);

std::string_view to_string(Convexity c);
std::string_view to_string(Monotonicity m);

/// Open interval (lo, hi) of the extended real line.
struct OpenRange {
  ExtendedReal lo;
  ExtendedReal hi;
};

/// h = g o f^-1 restricted to Ran(f on (0, 1)), together with its shape.
struct Composite {
  RealMap map;
  OpenRange domain;
  ShapeInfo shape;
};

/// Builds the composite. Builtin pairs get an exact shape; anything involving
/// a custom generator goes through classify_convexity_numeric.
Composite composite(const Generator& f, const Generator& g);

/// Exact convexity of g o f^-1 from the curvature numerators of f and g.
Convexity closed_form_convexity(const CurvatureNumerator& nf, const CurvatureNumerator& ng, Direction g_direction);

/// Sign scan of symmetric second differences of h over `grid_points` points
/// of the open domain, laid out uniformly in a bounded reparametrisation.
/// Returns Convex, Concave, Affine, Mixed or Unknown; never a strict class.
Convexity classify_convexity_numeric(const RealMap& h, const OpenRange& domain, int grid_points = 2001);

/// The fixed bijection (0, 1) -> domain used by the numerical scans.
double reparametrize(const OpenRange& domain, double s);

}  // namespace intorder
