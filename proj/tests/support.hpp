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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "intorder/generator.hpp"
#include "intorder/interval.hpp"

namespace intorder::proptest {

inline constexpr std::uint64_t kSeed = 42;

// Seeded source of random intervals and parameters for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Interval interval() {
    double a = unit(), b = unit();
    if (a > b) std::swap(a, b);
    return {a, b};
  }

  // Occasionally returns degenerate and boundary intervals.
  Interval interval_with_edges() {
    switch (integer(0, 9)) {
      case 0: {
        const double a = unit();
        return {a, a};
      }
      case 1: return {0.0, unit()};
      case 2: return {unit(), 1.0};
      default: return interval();
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Direct formulas for the builtin generators, written out independently of
// the library.
struct PlainGenerator {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> inv;
};

inline std::vector<PlainGenerator> plain_generators() {
  return {
      {"power(2)", [](double x) { return x * x; }, [](double y) { return std::sqrt(y); }},
      {"power(0.5)", [](double x) { return std::sqrt(x); }, [](double y) { return y * y; }},
      {"power(-1)", [](double x) { return 1.0 / x; }, [](double y) { return 1.0 / y; }},
      {"exponential(2)", [](double x) { return std::exp(2 * x); }, [](double y) { return std::log(y) / 2; }},
      {"logarithm", [](double x) { return std::log(x); }, [](double y) { return std::exp(y); }},
      {"logit", [](double x) { return std::log(x / (1 - x)); }, [](double y) { return 1 / (1 + std::exp(-y)); }},
      {"identity", [](double x) { return x; }, [](double y) { return y; }},
  };
}

inline Generator builtin_for(const std::string& name) {
  if (name == "power(2)") return Generator::power(2.0);
  if (name == "power(0.5)") return Generator::power(0.5);
  if (name == "power(-1)") return Generator::power(-1.0);
  if (name == "exponential(2)") return Generator::exponential(2.0);
  if (name == "logarithm") return Generator::logarithm();
  if (name == "logit") return Generator::logit();
  return Generator::identity();
}

}  // namespace intorder::proptest
