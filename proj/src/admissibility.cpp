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

#include "intorder/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "intorder/detail/numeric.hpp"

namespace intorder {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Admissible: return "Admissible";
    case Outcome::NotAdmissible: return "NotAdmissible";
    case Outcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr double kConfirmTol = 1e-10;
constexpr double kXTol = 1e-15;
constexpr double kWeightEq = 1e-15;

AdmissibilityVerdict verdict(Outcome o, std::string rule, std::string evidence,
                             std::optional<Witness> witness = std::nullopt) {
  AdmissibilityVerdict v;
  v.outcome = o;
  v.rule = std::move(rule);
  v.evidence = std::move(evidence);
  v.witness = std::move(witness);
  return v;
}

bool witness_less(const Witness& p, const Witness& q) {
  const auto c = lex_compare(p.u, q.u);
  if (c != 0) return c < 0;
  return lex_compare(p.x, q.x) < 0;
}

struct QlForm {
  Generator f;
  double w;
};

// Every family here is a strictly increasing transform of a quasi-linear
// mean, and such transforms do not change which interval pairs collide.
std::optional<QlForm> canonical_quasi_linear(const AggregationFunction& a) {
  const auto& d = a.descriptor();
  if (const auto* k = std::get_if<KProjectionDesc>(&d)) {
    if (k->w > 0.0 && k->w < 1.0) return QlForm{Generator::identity(), k->w};
    return std::nullopt;
  }
  if (const auto* q = std::get_if<QuasiLinearDesc>(&d)) return QlForm{q->f, q->w};
  if (const auto* s = std::get_if<SchurPairDesc>(&d)) return QlForm{s->f, 0.5};
  if (const auto* t = std::get_if<AdditiveGeneratorTNorm>(&d)) {
    if (t->kind() == ArchimedeanKind::Strict) return QlForm{t->generator(), 0.5};
    return std::nullopt;
  }
  if (const auto* s = std::get_if<AdditiveGeneratorTConorm>(&d)) {
    if (s->kind() == ArchimedeanKind::Strict) return QlForm{s->generator(), 0.5};
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> k_weight(const AggregationFunction& a) {
  if (const auto* k = std::get_if<KProjectionDesc>(&a.descriptor())) return k->w;
  return std::nullopt;
}

// Generator g with A = 0.5 (g(lo) + g(hi)), for Schur pairs and K_0.5.
std::optional<Generator> schur_generator(const AggregationFunction& a) {
  if (const auto* s = std::get_if<SchurPairDesc>(&a.descriptor())) return s->f;
  if (auto w = k_weight(a); w && *w == 0.5) return Generator::identity();
  return std::nullopt;
}

std::string describe_shape(const ShapeInfo& s) {
  std::ostringstream os;
  os << "g o f^-1 is " << to_string(s.convexity) << " and " << to_string(s.monotonicity)
     << (s.closed_form ? " (closed form)" : " (numerical)");
  return os.str();
}

// Attaches an oracle witness to a NotAdmissible verdict that has none.
void attach_search_witness(AdmissibilityVerdict& v, const AggregationFunction& a, const AggregationFunction& b,
                           const CheckOptions& opts) {
  if (v.outcome != Outcome::NotAdmissible || v.witness) return;
  v.witness = oracle_search(a, b, opts.oracle_resolution, opts.tol, opts.threads);
  if (!v.witness) {
    std::ostringstream os;
    os << v.evidence << "; no witness located at resolution " << opts.oracle_resolution;
    v.evidence = os.str();
  }
}

// Interval on the A-level c above z1, or nullopt when the column misses c.
std::optional<double> level_point(const AggregationFunction& a, double z1, double c) {
  const double bottom = a(z1, z1);
  const double top = a(z1, 1.0);
  if (!(c >= bottom && c <= top) || top == bottom) return std::nullopt;
  return detail::bisect([&](double z2) { return a(z1, z2) - c; }, z1, 1.0, kXTol);
}

void try_candidate(const AggregationFunction& a, const AggregationFunction& b, const Interval& u, const Interval& x,
                   double tol, std::vector<Witness>& out) {
  if (auto w = make_witness(a, b, u, x, tol)) out.push_back(*w);
}

// Level curves of A at c = k/R; B along each curve must be strictly monotone.
void scan_level_curves(const AggregationFunction& a, const AggregationFunction& b, int r, double tol, int threads,
                       std::vector<Witness>& out) {
  const std::size_t levels = static_cast<std::size_t>(r - 1);
  std::vector<std::vector<Witness>> found(levels);
  detail::parallel_for(levels, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t li = begin; li < end; ++li) {
      const double c = static_cast<double>(li + 1) / r;
      std::vector<double> z1s;
      std::vector<double> z2s;
      std::vector<double> bs;
      for (int i = 0; i <= r; ++i) {
        const double z1 = static_cast<double>(i) / r;
        if (auto z2 = level_point(a, z1, c)) {
          z1s.push_back(z1);
          z2s.push_back(*z2);
          bs.push_back(b(z1, *z2));
        }
      }
      const std::size_t n = bs.size();
      auto point = [&](std::size_t k) { return Interval(z1s[k], z2s[k]); };
      auto along = [&](double z1) -> std::optional<Interval> {
        auto z2 = level_point(a, z1, c);
        if (!z2) return std::nullopt;
        return Interval(z1, *z2);
      };
      auto solve_on = [&](std::size_t k, double v) -> std::optional<Interval> {
        try {
          const double z1 = detail::bisect(
              [&](double s) {
                auto p = along(s);
                return p ? b(*p) - v : std::nan("");
              },
              z1s[k], z1s[k + 1], kXTol);
          return along(z1);
        } catch (const std::runtime_error&) {
          return std::nullopt;
        }
      };

      int prev_sign = 0;
      std::size_t prev_step = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        const double d = bs[k + 1] - bs[k];
        if (std::abs(d) <= tol) {
          try_candidate(a, b, point(k), point(k + 1), tol, found[li]);
          continue;
        }
        const int sign = d > 0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign) {
          // Turning point between steps prev_step and k. The outer value
          // nearer the extremum is attained again on the opposite step.
          const std::size_t left = prev_step;
          const std::size_t right = k + 1;
          const bool is_max = prev_sign > 0;
          const bool left_closer = is_max ? bs[left] >= bs[right] : bs[left] <= bs[right];
          if (left_closer) {
            if (auto q = solve_on(k, bs[left])) try_candidate(a, b, point(left), *q, tol, found[li]);
          } else {
            if (auto q = solve_on(prev_step, bs[right])) try_candidate(a, b, *q, point(right), tol, found[li]);
          }
        }
        prev_sign = sign;
        prev_step = k;
      }
    }
  });
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
}

// Each grid interval against the degenerate interval on its A-level.
void scan_degenerate_partners(const AggregationFunction& a, const AggregationFunction& b, int r, double tol,
                              int threads, std::vector<Witness>& out) {
  auto diagonal = [&](const Interval& z) {
    const double level = a(z);
    return detail::bisect([&](double d) { return a(d, d) - level; }, 0.0, 1.0, kXTol);
  };
  auto phi = [&](const Interval& z) {
    const double d = diagonal(z);
    return b(z) - b(d, d);
  };
  auto at = [r](int i, int j) { return Interval(static_cast<double>(i) / r, static_cast<double>(j) / r); };

  // phi on the non-degenerate grid intervals, row by row.
  const auto rows = static_cast<std::size_t>(r);
  std::vector<std::vector<double>> values(rows);
  detail::parallel_for(rows, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const int ii = static_cast<int>(i);
      for (int j = ii + 1; j <= r; ++j) values[i].push_back(phi(at(ii, j)));
    }
  });
  auto value = [&](int i, int j) { return values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)]; };

  auto refine = [&](const Interval& p, const Interval& q) {
    try {
      const double s = detail::bisect(
          [&](double t) {
            return phi(Interval(p.lo() + t * (q.lo() - p.lo()), p.hi() + t * (q.hi() - p.hi())));
          },
          0.0, 1.0, kXTol);
      const Interval z(p.lo() + s * (q.lo() - p.lo()), p.hi() + s * (q.hi() - p.hi()));
      const double d = diagonal(z);
      try_candidate(a, b, z, Interval(d, d), tol, out);
    } catch (const std::runtime_error&) {
    }
  };

  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      const double v = value(i, j);
      if (std::abs(v) <= tol) {
        const Interval z = at(i, j);
        const double d = diagonal(z);
        try_candidate(a, b, z, Interval(d, d), tol, out);
        continue;
      }
      if (j + 1 <= r) {
        const double w = value(i, j + 1);
        if (std::abs(w) > tol && (v > 0) != (w > 0)) refine(at(i, j), at(i, j + 1));
      }
      if (i + 1 < j) {
        const double w = value(i + 1, j);
        if (std::abs(w) > tol && (v > 0) != (w > 0)) refine(at(i, j), at(i + 1, j));
      }
    }
  }
}

}  // namespace

std::optional<Witness> make_witness(const AggregationFunction& a, const AggregationFunction& b, const Interval& u,
                                    const Interval& x, double tol) {
  if (endpoint_distance(u, x) < kWitnessMinGap) return std::nullopt;
  const double ra = std::abs(a(u) - a(x));
  const double rb = std::abs(b(u) - b(x));
  if (!(ra <= tol && rb <= tol)) return std::nullopt;
  if (lex_compare(x, u) < 0) return Witness{x, u, ra, rb};
  return Witness{u, x, ra, rb};
}

std::optional<AdmissibilityVerdict> rule_quasi_endpoint_exclusion(const Generator& f, double w1, const Generator& g,
                                                                  double w2) {
  const bool zero = ext_min(ext_abs(f.at_zero()), ext_abs(g.at_zero())).is_infinite();
  const bool one = ext_min(ext_abs(f.at_one()), ext_abs(g.at_one())).is_infinite();
  if (!zero && !one) return std::nullopt;
  const auto a = AggregationFunction::quasi_linear_mean(f, w1);
  const auto b = AggregationFunction::quasi_linear_mean(g, w2);
  const Interval u = zero ? Interval(0.0, 0.3) : Interval(0.3, 1.0);
  const Interval x = zero ? Interval(0.0, 0.6) : Interval(0.6, 1.0);
  std::string ev = zero ? "f(0) and g(0) are both infinite; both means vanish on [0, t]"
                        : "f(1) and g(1) are both infinite; both means equal 1 on [t, 1]";
  return verdict(Outcome::NotAdmissible, "Thm 4.1", std::move(ev), make_witness(a, b, u, x));
}

std::optional<AdmissibilityVerdict> rule_quasi_equal_weights(const Generator& f, const Generator& g, double w,
                                                             const CheckOptions& opts) {
  if (auto v = rule_quasi_endpoint_exclusion(f, w, g, w)) return v;
  const Composite h = composite(f, g);
  if (is_strict(h.shape.convexity)) return verdict(Outcome::Admissible, "Cor 4.4", describe_shape(h.shape));
  if (!h.shape.closed_form) return verdict(Outcome::Unknown, "Cor 4.4", describe_shape(h.shape));
  auto v = verdict(Outcome::NotAdmissible, "Cor 4.4", describe_shape(h.shape));
  attach_search_witness(v, AggregationFunction::quasi_linear_mean(f, w), AggregationFunction::quasi_linear_mean(g, w),
                        opts);
  return v;
}

std::optional<AdmissibilityVerdict> rule_quasi_unequal_weights(const Generator& f, double w1, const Generator& g,
                                                               double w2) {
  const bool finite = ext_min(ext_abs(f.at_zero()), ext_abs(g.at_zero())).is_finite() &&
                      ext_min(ext_abs(f.at_one()), ext_abs(g.at_one())).is_finite();
  if (!finite || std::abs(w1 - w2) <= kWeightEq) return std::nullopt;

  auto row = [](const Generator& p, double v1, const Generator& q, double v2) -> std::optional<std::string> {
    const Composite h = composite(p, q);
    if (!h.shape.closed_form) return std::nullopt;
    const int sf = p.increasing() ? 1 : -1;
    const int sh = h.shape.monotonicity == Monotonicity::StrictlyIncreasing ? 1 : -1;
    const int sw = v1 < v2 ? 1 : -1;
    const bool need_convex = sf * sh * sw > 0;
    const bool match = need_convex ? is_convex(h.shape.convexity) : is_concave(h.shape.convexity);
    if (!match) return std::nullopt;
    std::ostringstream os;
    os << (sw > 0 ? "w1 < w2" : "w1 > w2") << ", f " << (sf > 0 ? "increasing" : "decreasing") << ", "
       << describe_shape(h.shape);
    return os.str();
  };
  if (auto r = row(f, w1, g, w2)) return verdict(Outcome::Admissible, "Thm 4.3 / Table 1", *r);
  if (auto r = row(g, w2, f, w1)) return verdict(Outcome::Admissible, "Thm 4.3 / Table 1", "swapped pair: " + *r);
  return std::nullopt;
}

AdmissibilityVerdict rule_k0_k1(double w, const AggregationFunction& b, int resolution, double tol) {
  if (w != 0.0 && w != 1.0) throw std::invalid_argument("rule_k0_k1: weight must be 0 or 1");
  const auto k = AggregationFunction::k_projection(w);
  const int r = resolution;
  auto at = [r](int i) { return static_cast<double>(i) / r; };
  if (w == 0.0) {
    for (int i = 0; i <= r; ++i) {
      for (int j = i; j < r; ++j) {
        if (b(at(i), at(j + 1)) - b(at(i), at(j)) <= tol) {
          return verdict(Outcome::NotAdmissible, "Ex 2.6", "x -> B(x1, x) is not strictly increasing",
                         make_witness(k, b, Interval(at(i), at(j)), Interval(at(i), at(j + 1)), tol));
        }
      }
    }
    return verdict(Outcome::Admissible, "Ex 2.6", "x -> B(x1, x) strictly increasing on the grid");
  }
  for (int j = 0; j <= r; ++j) {
    for (int i = 0; i < j; ++i) {
      if (b(at(i + 1), at(j)) - b(at(i), at(j)) <= tol) {
        return verdict(Outcome::NotAdmissible, "Ex 2.6", "x -> B(x, x2) is not strictly increasing",
                       make_witness(k, b, Interval(at(i), at(j)), Interval(at(i + 1), at(j)), tol));
      }
    }
  }
  return verdict(Outcome::Admissible, "Ex 2.6", "x -> B(x, x2) strictly increasing on the grid");
}

std::pair<Interval, Interval> nilpotent_counterexample(const AdditiveGeneratorTNorm& t,
                                                       const AdditiveGeneratorTConorm& s) {
  const bool t_strict = t.kind() == ArchimedeanKind::Strict;
  const bool s_strict = s.kind() == ArchimedeanKind::Strict;
  if (t_strict && s_strict) throw std::invalid_argument("nilpotent_counterexample: both generators are strict");
  const Generator& tg = t.generator();
  const Generator& sg = s.generator();
  auto solve = [](const Generator& g, double target, double lo, double hi) {
    return detail::bisect([&](double z) { return g(z).value() - target; }, lo, hi);
  };
  auto same = [](double d1, double d2) { return std::abs(d1 - d2) <= 4e-16 * std::max(d1, d2); };

  if (t_strict) {
    // S saturates on [l_s, 1]; match t-sums there.
    const double ls = sg.inverse(0.5 * sg.at_one().value());
    const double u = 0.5 * (ls + 1.0);
    const double tu = tg(u).value();
    const double d1 = tu - tg(1.0).value();
    const double d2 = tg(ls).value() - tu;
    const Interval uu(u, u);
    if (same(d1, d2)) return {uu, Interval(ls, 1.0)};
    if (d1 < d2) return {uu, Interval(solve(tg, tu + d1, ls, u), 1.0)};
    return {uu, Interval(ls, solve(tg, tu - d2, u, 1.0))};
  }

  // T vanishes on [0, m_t]; match s-sums there, below the S saturation level.
  double m = tg.inverse(0.5 * tg.at_zero().value());
  if (!s_strict) m = std::min(m, sg.inverse(0.5 * sg.at_one().value()));
  const double u = 0.5 * m;
  const double su = sg(u).value();
  const double d1 = su - sg(0.0).value();
  const double d2 = sg(m).value() - su;
  const Interval uu(u, u);
  if (same(d1, d2)) return {uu, Interval(0.0, m)};
  if (d1 < d2) return {uu, Interval(0.0, solve(sg, su + d1, u, m))};
  return {uu, Interval(solve(sg, su - d2, 0.0, u), m)};
}

AdmissibilityVerdict rule_tnorm_tconorm(const AdditiveGeneratorTNorm& t, const AdditiveGeneratorTConorm& s,
                                        const CheckOptions& opts) {
  const auto a = AggregationFunction::tnorm(t);
  const auto b = AggregationFunction::tconorm(s);
  if (t.kind() == ArchimedeanKind::Nilpotent || s.kind() == ArchimedeanKind::Nilpotent) {
    const auto [u, x] = nilpotent_counterexample(t, s);
    auto v = verdict(Outcome::NotAdmissible, "Thm 4.9",
                     t.kind() == ArchimedeanKind::Nilpotent ? "t-norm is nilpotent" : "t-conorm is nilpotent",
                     make_witness(a, b, u, x, opts.tol));
    attach_search_witness(v, a, b, opts);
    return v;
  }
  const Composite h = composite(t.generator(), s.generator());
  const std::string ev = "s o t^-1: " + describe_shape(h.shape);
  if (is_strict(h.shape.convexity)) return verdict(Outcome::Admissible, "Thm 4.8", ev);
  if (!h.shape.closed_form) return verdict(Outcome::Unknown, "Thm 4.8", ev);
  auto v = verdict(Outcome::NotAdmissible, "Thm 4.8", ev);
  attach_search_witness(v, a, b, opts);
  return v;
}

AdmissibilityVerdict rule_schur_pair(const Generator& f, const Generator& g, const CheckOptions& opts) {
  const Composite h = composite(f, g);
  if (is_strict(h.shape.convexity)) return verdict(Outcome::Admissible, "Thm 4.10", describe_shape(h.shape));
  if (!h.shape.closed_form) return verdict(Outcome::Unknown, "Thm 4.10", describe_shape(h.shape));
  auto v = verdict(Outcome::NotAdmissible, "Thm 4.10", describe_shape(h.shape));
  attach_search_witness(v, AggregationFunction::schur_pair_mean(f), AggregationFunction::schur_pair_mean(g), opts);
  return v;
}

std::optional<Witness> oracle_search(const AggregationFunction& a, const AggregationFunction& b, int resolution,
                                     double tol, int threads) {
  if (resolution < 50) throw std::invalid_argument("oracle_search: resolution must be at least 50");
  const double confirm = std::min(tol, kConfirmTol);
  std::vector<Witness> found;
  scan_degenerate_partners(a, b, resolution, confirm, threads, found);
  if (found.empty()) {
    scan_level_curves(a, b, resolution, confirm, threads, found);
    scan_level_curves(b, a, resolution, confirm, threads, found);
    // The swapped scan reports residuals in (B, A) order.
    for (auto& w : found) {
      w.residual_a = std::abs(a(w.u) - a(w.x));
      w.residual_b = std::abs(b(w.u) - b(w.x));
    }
  }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end(), witness_less);
}

namespace {

AdmissibilityVerdict dispatch(const AggregationFunction& a, const AggregationFunction& b, const CheckOptions& opts) {
  const auto wa = k_weight(a);
  const auto wb = k_weight(b);
  if (wa && (*wa == 0.0 || *wa == 1.0)) return rule_k0_k1(*wa, b, opts.oracle_resolution, opts.tol);
  if (wb && (*wb == 0.0 || *wb == 1.0)) return rule_k0_k1(*wb, a, opts.oracle_resolution, opts.tol);

  if (wa && wb) {
    if (*wa != *wb) return verdict(Outcome::Admissible, "K-alpha-beta", "distinct projection weights");
    const double w = *wa;
    return verdict(Outcome::NotAdmissible, "K-alpha-beta", "identical projections",
                   make_witness(a, b, Interval(0.5 - 0.2 * w, 0.5 + 0.2 * (1.0 - w)), Interval(0.5, 0.5), opts.tol));
  }

  const auto* ta = std::get_if<AdditiveGeneratorTNorm>(&a.descriptor());
  const auto* tb = std::get_if<AdditiveGeneratorTNorm>(&b.descriptor());
  const auto* sa = std::get_if<AdditiveGeneratorTConorm>(&a.descriptor());
  const auto* sb = std::get_if<AdditiveGeneratorTConorm>(&b.descriptor());
  if (ta && sb) return rule_tnorm_tconorm(*ta, *sb, opts);
  if (tb && sa) return rule_tnorm_tconorm(*tb, *sa, opts);

  const auto fa = schur_generator(a);
  const auto fb = schur_generator(b);
  if (fa && fb) return rule_schur_pair(*fa, *fb, opts);

  const auto qa = canonical_quasi_linear(a);
  const auto qb = canonical_quasi_linear(b);
  if (qa && qb) {
    if (auto v = rule_quasi_endpoint_exclusion(qa->f, qa->w, qb->f, qb->w)) return *v;
    if (std::abs(qa->w - qb->w) <= kWeightEq) return *rule_quasi_equal_weights(qa->f, qb->f, qa->w, opts);
    if (auto v = rule_quasi_unequal_weights(qa->f, qa->w, qb->f, qb->w)) return *v;
    return verdict(Outcome::Unknown, "Thm 4.3 / Table 1", "unequal weights and no table row matches");
  }
  return verdict(Outcome::Unknown, "none", "no rule applies to this pair of families");
}

}  // namespace

AdmissibilityVerdict check_pair(const PairSpec& spec, const CheckOptions& opts) {
  const auto& a = spec.a;
  const auto& b = spec.b;
  AdmissibilityVerdict v = dispatch(a, b, opts);

  // Rules may build their witness on a transformed pair; re-evaluate it here.
  if (v.witness) {
    v.witness = make_witness(a, b, v.witness->u, v.witness->x, opts.tol);
  }
  attach_search_witness(v, a, b, opts);

  if (v.outcome == Outcome::Unknown && opts.oracle_fallback) {
    if (auto w = oracle_search(a, b, opts.oracle_resolution, opts.tol, opts.threads)) {
      std::string ev = "rule '" + v.rule + "' undecided (" + v.evidence + "); grid search found a witness";
      return verdict(Outcome::NotAdmissible, "oracle", std::move(ev), w);
    }
    std::ostringstream os;
    os << v.evidence << "; no witness at resolution " << opts.oracle_resolution;
    v.evidence = os.str();
    return v;
  }

  if (opts.cross_check && v.outcome != Outcome::Unknown) {
    const auto w = oracle_search(a, b, opts.oracle_resolution, opts.tol, opts.threads);
    v.oracle_agrees = v.outcome == Outcome::Admissible ? !w.has_value() : (w.has_value() || v.witness.has_value());
  }
  return v;
}

WeightGridDiagnostic weight_grid_diagnostic(const Generator& f, const Generator& g, int weight_steps, int resolution) {
  WeightGridDiagnostic out;
  const bool finite = ext_min(ext_abs(f.at_zero()), ext_abs(g.at_zero())).is_finite() &&
                      ext_min(ext_abs(f.at_one()), ext_abs(g.at_one())).is_finite();
  const Composite h = composite(f, g);
  out.composite_shape = h.shape;
  const bool monotone = h.shape.monotonicity == Monotonicity::StrictlyIncreasing ||
                        h.shape.monotonicity == Monotonicity::StrictlyDecreasing;
  out.applicable = finite && monotone && h.shape.closed_form;
  if (!out.applicable) return out;

  const bool same = f.increasing() == (h.shape.monotonicity == Monotonicity::StrictlyIncreasing);
  out.all_lower = same ? is_convex(h.shape.convexity) : is_concave(h.shape.convexity);
  out.all_upper = same ? is_concave(h.shape.convexity) : is_convex(h.shape.convexity);

  for (int i = 1; i <= weight_steps; ++i) {
    for (int j = 1; j <= weight_steps; ++j) {
      if (i == j) continue;
      const double w1 = static_cast<double>(i) / (weight_steps + 1);
      const double w2 = static_cast<double>(j) / (weight_steps + 1);
      ++out.sampled;
      const auto w = oracle_search(AggregationFunction::quasi_linear_mean(f, w1),
                                   AggregationFunction::quasi_linear_mean(g, w2), resolution);
      if (w) ++(w1 < w2 ? out.lower_witnesses : out.upper_witnesses);
    }
  }
  return out;
}

}  // namespace intorder
