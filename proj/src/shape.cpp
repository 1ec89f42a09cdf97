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

#include "intorder/shape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace intorder {

bool is_convex(Convexity c) {
  return c == Convexity::StrictlyConvex || c == Convexity::Convex || c == Convexity::Affine;
}

bool is_concave(Convexity c) {
  return c == Convexity::StrictlyConcave || c == Convexity::Concave || c == Convexity::Affine;
}

bool is_strict(Convexity c) { return c == Convexity::StrictlyConvex || c == Convexity::StrictlyConcave; }

std::string_view to_string(Convexity c) {
  switch (c) {
    case Convexity::StrictlyConvex: return "StrictlyConvex";
    case Convexity::Convex: return "Convex";
    case Convexity::Affine: return "Affine";
    case Convexity::Concave: return "Concave";
    case Convexity::StrictlyConcave: return "StrictlyConcave";
    case Convexity::Mixed: return "Mixed";
    case Convexity::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::StrictlyIncreasing: return "StrictlyIncreasing";
    case Monotonicity::StrictlyDecreasing: return "StrictlyDecreasing";
    case Monotonicity::NonMonotone: return "NonMonotone";
    case Monotonicity::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// Real roots of c0 + c1 x + c2 x^2 (any multiplicity, possibly repeated).
std::vector<double> quadratic_roots(const CurvatureNumerator& p) {
  std::vector<double> roots;
  if (p.c2 == 0.0) {
    if (p.c1 != 0.0) roots.push_back(-p.c0 / p.c1);
    return roots;
  }
  const double disc = p.c1 * p.c1 - 4.0 * p.c2 * p.c0;
  if (disc < 0.0) return roots;
  const double q = -0.5 * (p.c1 + std::copysign(std::sqrt(disc), p.c1));
  if (q != 0.0) {
    roots.push_back(q / p.c2);
    roots.push_back(p.c0 / q);
  } else {
    roots.push_back(0.0);  // c1 == 0 and disc == 0 forces c0 == 0
  }
  return roots;
}

}  // namespace

Convexity closed_form_convexity(const CurvatureNumerator& nf, const CurvatureNumerator& ng, Direction g_direction) {
  // sign h'' = sign(g') * sign(N_g - N_f) on (0, 1).
  const CurvatureNumerator d = ng - nf;
  if (d.c0 == 0.0 && d.c1 == 0.0 && d.c2 == 0.0) return Convexity::Affine;

  std::vector<double> cuts{0.0, 1.0};
  for (double r : quadratic_roots(d)) {
    if (r > 0.0 && r < 1.0) cuts.push_back(r);
  }
  std::sort(cuts.begin(), cuts.end());

  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 1e-12) continue;
    const double v = d(0.5 * (cuts[i] + cuts[i + 1]));
    pos = pos || v > 0.0;
    neg = neg || v < 0.0;
  }
  if (pos && neg) return Convexity::Mixed;
  if (!pos && !neg) return Convexity::Affine;
  const bool convex = pos == (g_direction == Direction::Increasing);
  return convex ? Convexity::StrictlyConvex : Convexity::StrictlyConcave;
}

double reparametrize(const OpenRange& domain, double s) {
  const bool lo_fin = domain.lo.is_finite();
  const bool hi_fin = domain.hi.is_finite();
  if (lo_fin && hi_fin) return domain.lo.value() + (domain.hi.value() - domain.lo.value()) * s;
  if (lo_fin) return domain.lo.value() + s / (1.0 - s);
  if (hi_fin) return domain.hi.value() - (1.0 - s) / s;
  return std::log(s) - std::log1p(-s);
}

Convexity classify_convexity_numeric(const RealMap& h, const OpenRange& domain, int grid_points) {
  if (grid_points < 5) throw std::invalid_argument("classify_convexity_numeric: need at least 5 grid points");
  if (!(domain.lo < domain.hi)) throw std::invalid_argument("classify_convexity_numeric: empty domain");

  const auto n = static_cast<std::size_t>(grid_points);
  std::vector<double> y(n);
  std::vector<double> hv(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = reparametrize(domain, static_cast<double>(i + 1) / static_cast<double>(n + 1));
    hv[i] = h(y[i]);
  }

  std::size_t valid = 0;
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double left = y[i] - y[i - 1];
    const double right = y[i + 1] - y[i];
    if (!(left > 0.0) || !(right > 0.0)) continue;
    // Symmetric stencil: one side reuses a grid value, the other is evaluated.
    double a = 0.0;
    double c = 0.0;
    if (left <= right) {
      a = hv[i - 1];
      c = h(y[i] + left);
    } else {
      a = h(y[i] - right);
      c = hv[i + 1];
    }
    const double b = hv[i];
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) continue;
    ++valid;
    const double d2 = a - 2.0 * b + c;
    const double noise = 1e-10 * (std::abs(a) + 2.0 * std::abs(b) + std::abs(c));
    if (d2 > noise) pos = true;
    if (d2 < -noise) neg = true;
  }
  if (valid < n / 2) return Convexity::Unknown;
  if (pos && neg) return Convexity::Mixed;
  if (pos) return Convexity::Convex;
  if (neg) return Convexity::Concave;
  return Convexity::Affine;
}

Composite composite(const Generator& f, const Generator& g) {
  for (const Generator* gen : {&f, &g}) {
    if (!gen->is_builtin()) {
      if (auto why = generator_violation(*gen)) {
        throw std::invalid_argument("composite: generator '" + gen->name() + "' invalid: " + *why);
      }
    }
  }
  Composite out;
  out.domain = {f.range_lo(), f.range_hi()};
  out.map = [f, g](double y) { return g(f.inverse(y)).value(); };
  out.shape.monotonicity =
      f.direction() == g.direction() ? Monotonicity::StrictlyIncreasing : Monotonicity::StrictlyDecreasing;

  const auto nf = f.curvature_numerator();
  const auto ng = g.curvature_numerator();
  if (nf && ng) {
    out.shape.convexity = closed_form_convexity(*nf, *ng, g.direction());
    out.shape.closed_form = true;
  } else {
    out.shape.convexity = classify_convexity_numeric(out.map, out.domain);
    out.shape.closed_form = false;
  }
  return out;
}

}  // namespace intorder
