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

#include "intorder/coincidence.hpp"

#include <cmath>
#include <stdexcept>

#include "intorder/detail/numeric.hpp"
#include "intorder/shape.hpp"

namespace intorder {

std::string_view to_string(SchurClass c) {
  switch (c) {
    case SchurClass::StrictlySchurConvex: return "StrictlySchurConvex";
    case SchurClass::SchurConvex: return "SchurConvex";
    case SchurClass::StrictlySchurConcave: return "StrictlySchurConcave";
    case SchurClass::SchurConcave: return "SchurConcave";
    case SchurClass::Constant: return "Constant";
    case SchurClass::Neither: return "Neither";
    case SchurClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr double kStrictMargin = 1e-10;

bool strictly_opposed(Ordering p, Ordering q) {
  return (p == Ordering::Less && q == Ordering::Greater) || (p == Ordering::Greater && q == Ordering::Less);
}

struct ChunkResult {
  std::size_t count = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first;
};

void fill_thresholds(const TotalOrderSpec& second, CoincidenceReport& r) {
  if (!r.witness || !second.is_alpha_beta()) return;
  if (auto a = k_crossover(r.witness->u, r.witness->x)) r.alpha_thresholds.push_back(*a);
}

}  // namespace

std::optional<double> k_crossover(const Interval& u, const Interval& x) {
  auto gap = [&](double a) { return k_projection(a, u) - k_projection(a, x); };
  const double g0 = gap(0.0);
  const double g1 = gap(1.0);
  if (g0 != 0.0 && g1 != 0.0 && (g0 > 0) == (g1 > 0)) return std::nullopt;
  if (g0 == 0.0 && g1 == 0.0) return std::nullopt;  // identical projections throughout
  return detail::bisect(gap, 0.0, 1.0);
}

CoincidenceReport orders_coincide(const TotalOrderSpec& first, const TotalOrderSpec& second, int resolution,
                                  int threads) {
  if (resolution < 50) throw std::invalid_argument("orders_coincide: resolution must be at least 50");
  const auto grid = interval_grid(resolution);
  const std::size_t n = grid.size();
  std::vector<OrderKey> k1(n);
  std::vector<OrderKey> k2(n);
  for (std::size_t i = 0; i < n; ++i) {
    k1[i] = first.key(grid[i]);
    k2[i] = second.key(grid[i]);
  }

  const auto workers = static_cast<std::size_t>(std::max(threads, 1));
  std::vector<ChunkResult> chunks(workers);
  const std::size_t per = (n + workers - 1) / workers;
  detail::parallel_for(workers, threads, [&](std::size_t wb, std::size_t we) {
    for (std::size_t w = wb; w < we; ++w) {
      ChunkResult& out = chunks[w];
      for (std::size_t i = w * per; i < std::min(n, (w + 1) * per); ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!strictly_opposed(compare_keys(k1[i], k1[j]), compare_keys(k2[i], k2[j]))) continue;
          ++out.count;
          if (!out.first) out.first = std::pair{i, j};
        }
      }
    }
  });

  CoincidenceReport r;
  r.resolution = resolution;
  for (const auto& c : chunks) {
    r.disagreements += c.count;
    if (!r.witness && c.first) {
      const auto [i, j] = *c.first;
      r.witness = Disagreement{grid[i], grid[j], compare_keys(k1[i], k1[j]), compare_keys(k2[i], k2[j])};
    }
  }
  r.coincide = r.disagreements == 0;
  fill_thresholds(second, r);
  return r;
}

CoincidenceReport orders_coincide_on(const TotalOrderSpec& first, const TotalOrderSpec& second,
                                     const std::vector<Interval>& items) {
  CoincidenceReport r;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const Ordering o1 = compare(first, items[i], items[j]);
      const Ordering o2 = compare(second, items[i], items[j]);
      if (!strictly_opposed(o1, o2)) continue;
      ++r.disagreements;
      if (!r.witness) r.witness = Disagreement{items[i], items[j], o1, o2};
    }
  }
  r.coincide = r.disagreements == 0;
  fill_thresholds(second, r);
  return r;
}

std::vector<Disagreement> all_disagreements(const TotalOrderSpec& first, const TotalOrderSpec& second,
                                            int resolution) {
  const auto grid = interval_grid(resolution);
  std::vector<OrderKey> k1;
  std::vector<OrderKey> k2;
  for (const auto& z : grid) {
    k1.push_back(first.key(z));
    k2.push_back(second.key(z));
  }
  std::vector<Disagreement> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const Ordering o1 = compare_keys(k1[i], k1[j]);
      const Ordering o2 = compare_keys(k2[i], k2[j]);
      if (strictly_opposed(o1, o2)) out.push_back({grid[i], grid[j], o1, o2});
    }
  }
  return out;
}

SchurClass schur_classify(const AggregationFunction& f, int resolution) {
  if (resolution < 50) throw std::invalid_argument("schur_classify: resolution must be at least 50");
  const auto& d = f.descriptor();
  if (const auto* k = std::get_if<KProjectionDesc>(&d)) {
    // K_w = (1 - w) sigma + (2w - 1) hi along lo + hi = sigma.
    if (k->w > 0.5) return SchurClass::StrictlySchurConvex;
    if (k->w < 0.5) return SchurClass::StrictlySchurConcave;
    return SchurClass::Constant;
  }
  if (const auto* s = std::get_if<SchurPairDesc>(&d); s && s->f.is_builtin()) {
    switch (composite(Generator::identity(), s->f).shape.convexity) {
      case Convexity::StrictlyConvex: return SchurClass::StrictlySchurConvex;
      case Convexity::StrictlyConcave: return SchurClass::StrictlySchurConcave;
      case Convexity::Affine: return SchurClass::Constant;
      case Convexity::Mixed: return SchurClass::Neither;
      default: break;
    }
  }

  const int r = resolution;
  bool up = false;
  bool down = false;
  for (int k = 1; k < 2 * r; ++k) {
    double prev = NAN;
    for (int j = (k + 1) / 2; j <= std::min(k, r); ++j) {
      const double v = f(static_cast<double>(k - j) / r, static_cast<double>(j) / r);
      if (!std::isfinite(v)) return SchurClass::Unknown;
      if (!std::isnan(prev)) {
        up = up || v > prev + kOrderTieTol;
        down = down || v < prev - kOrderTieTol;
      }
      prev = v;
    }
  }
  if (up && down) return SchurClass::Neither;
  if (up) return SchurClass::SchurConvex;
  if (down) return SchurClass::SchurConcave;
  return SchurClass::Constant;
}

CoincidenceReport check_prop51(const AggregationFunction& b, int resolution, int threads) {
  const auto half = AggregationFunction::k_projection(0.5);
  CheckOptions opts;
  opts.threads = threads;
  const AdmissibilityVerdict v = check_pair({half, b}, opts);
  if (v.outcome != Outcome::Admissible) {
    throw std::invalid_argument("check_prop51: (K_0.5, " + b.name() + ") is not known to be admissible (" +
                                std::string(to_string(v.outcome)) + ")");
  }
  const SchurClass cls = schur_classify(b, resolution);
  const bool concave = cls == SchurClass::StrictlySchurConcave || cls == SchurClass::SchurConcave;
  const bool strict = cls == SchurClass::StrictlySchurConvex || cls == SchurClass::StrictlySchurConcave;
  const auto target = TotalOrderSpec::alpha_beta(0.5, concave ? 0.0 : 1.0);
  CoincidenceReport r = orders_coincide(TotalOrderSpec::generated_unchecked(half, b), target, resolution, threads);
  r.certainty = strict && r.coincide ? "proved" : "grid";
  return r;
}

namespace {

// Nested pair with equal K_alpha, then the left end of the inner interval is
// pushed right until the sums of F are still ordered. Returns (u_hat, x).
std::pair<Interval, Interval> convex_branch(const std::function<double(double)>& F, double alpha) {
  const Interval x(0.1, 0.9);
  const double r = 0.4;
  const double u1 = x.lo() + alpha * r;
  const double u2 = x.hi() - (1.0 - alpha) * r;
  const double budget = F(x.lo()) + F(x.hi());
  if (!(F(u1) + F(u2) < budget)) throw std::runtime_error("prop53_counterexample: nested pair not separated by F");
  const double target = budget - F(u2);
  double cap = u2;
  if (F(u2) > target) cap = detail::bisect([&](double y) { return F(y) - target; }, u1, u2);
  const double uh = u1 + 0.5 * (cap - u1);
  return {Interval(uh, u2), x};
}

}  // namespace

std::pair<Interval, Interval> prop53_counterexample(const Generator& f, double alpha, double beta) {
  if (alpha == beta) throw std::invalid_argument("prop53_counterexample: alpha and beta must differ");
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("prop53_counterexample: alpha, beta must lie in [0, 1]");
  }
  const auto mean = AggregationFunction::schur_pair_mean(f);
  const Convexity shape = composite(Generator::identity(), f).shape.convexity;
  const bool convex_side = alpha <= 0.5;
  if (convex_side ? !is_convex(shape) || shape == Convexity::Affine
                  : !is_concave(shape) || shape == Convexity::Affine) {
    throw std::invalid_argument(std::string("prop53_counterexample: f must be ") +
                                (convex_side ? "convex" : "concave") + " for this alpha");
  }

  Interval first(0.0, 0.0);
  Interval second(0.0, 0.0);
  if (convex_side) {
    auto [uh, x] = convex_branch([&](double y) { return f(y).value(); }, alpha);
    first = uh;
    second = x;
  } else {
    // z -> [1 - hi, 1 - lo] turns f into 1 - f(1 - y) and alpha into 1 - alpha.
    auto [uh, x] = convex_branch([&](double y) { return 1.0 - f(1.0 - y).value(); }, 1.0 - alpha);
    first = Interval(1.0 - x.hi(), 1.0 - x.lo());
    second = Interval(1.0 - uh.hi(), 1.0 - uh.lo());
  }
  const bool mean_ok = mean(first) < mean(second) - kStrictMargin;
  const bool proj_ok = k_projection(alpha, second) < k_projection(alpha, first) - kStrictMargin;
  if (!mean_ok || !proj_ok) throw std::runtime_error("prop53_counterexample: construction failed to verify");
  return {first, second};
}

}  // namespace intorder
