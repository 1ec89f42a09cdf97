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

#include <string>
#include <vector>

#include "intorder/admissibility.hpp"

namespace intorder {

/// A pair with a known admissibility verdict.
struct BatteryCase {
  std::string group;
  std::string label;
  PairSpec pair;
  Outcome expected;
};

struct BatteryRow {
  BatteryCase item;
  AdmissibilityVerdict verdict;
  bool agrees() const { return verdict.outcome == item.expected; }
};

/// Known verdicts for weighted power, exponential, geometric and logit means
/// and their mixtures, the unequal-weight sign table rows, t-norm/t-conorm pairs, Schur pairs
/// and projection pairs. Every parameter region is sampled at three or more
/// points.
std::vector<BatteryCase> reference_battery();

std::vector<BatteryRow> run_battery(const std::vector<BatteryCase>& cases, const CheckOptions& opts = {});

}  // namespace intorder
