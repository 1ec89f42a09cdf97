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

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "intorder/admissibility.hpp"
#include "intorder/battery.hpp"
#include "intorder/coincidence.hpp"
#include "intorder/order.hpp"

namespace intorder {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable, unwritable or malformed data files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"kind": "power", "gamma": 2}. Unknown kinds are rejected with the list of
/// supported ones.
Generator generator_from_json(const Json& j);
Json to_json(const Generator& g);

/// {"family": "quasi_linear", "generator": {...}, "weight": 0.5},
/// {"family": "schur_pair", "f": {...}}, {"family": "tnorm", "generator": {...}},
/// {"family": "tconorm", "generator": {...}}, {"family": "k", "w": 0.5}.
AggregationFunction aggregator_from_json(const Json& j);

/// {"type": "alpha_beta", "alpha": 0.5, "beta": 1},
/// {"type": "generated", "a": {...}, "b": {...}, "check": true}, or one of
/// {"type": "lexicographic" | "antilexicographic" | "xu_yager" |
/// "information_quality"}.
TotalOrderSpec order_from_json(const Json& j, const CheckOptions& opts = {});

Json to_json(const Interval& z);
Json to_json(const Witness& w);
Json to_json(const AdmissibilityVerdict& v);
Json to_json(const CoincidenceReport& r);

/// Parses a JSON document; throws ConfigError on syntax errors.
Json parse_json(std::istream& in, const std::string& what);
Json load_json_file(const std::string& path);

/// CSV with one "lo,hi" per line (header optional) or, for a .json path, an
/// array of two-element arrays.
std::vector<Interval> read_intervals(const std::string& path);
std::vector<Interval> read_intervals_csv(std::istream& in);
std::vector<Interval> read_intervals_json(std::istream& in);

/// rank,index,lo,hi with 1-based rank and 0-based original index.
void write_ranked_csv(std::ostream& out, const std::vector<Interval>& items, const std::vector<std::size_t>& order);

void write_disagreements_csv(std::ostream& out, const std::vector<Disagreement>& rows);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace intorder
