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

#include "intorder/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace intorder {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  return j.at(key);
}

double require_number(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number()) throw ConfigError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

std::string require_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) throw ConfigError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

template <typename Fn>
auto rethrow_as_config(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::optional<double> parse_double(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Json ordering_json(Ordering o) { return std::string(to_string(o)); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

Generator generator_from_json(const Json& j) {
  const std::string where = "generator";
  const std::string kind = require_string(j, "kind", where);
  return rethrow_as_config(where, [&] {
    if (kind == "identity") return Generator::identity();
    if (kind == "power") return Generator::power(require_number(j, "gamma", where));
    if (kind == "exponential") return Generator::exponential(require_number(j, "gamma", where));
    if (kind == "logarithm") return Generator::logarithm();
    if (kind == "logit") return Generator::logit();
    if (kind == "negated_log") return Generator::negated_log();
    if (kind == "one_minus") return Generator::one_minus();
    if (kind == "neg_log_complement") return Generator::neg_log_complement();
    throw ConfigError("unknown generator kind '" + kind + "'; supported kinds: " +
                      join(Generator::builtin_kind_names()));
  });
}

Json to_json(const Generator& g) {
  static const char* names[] = {"identity", "power",    "exponential",        "logarithm", "logit",
                                "negated_log", "one_minus", "neg_log_complement", "custom"};
  Json j;
  j["kind"] = names[static_cast<int>(g.kind())];
  if (g.kind() == GeneratorKind::Power || g.kind() == GeneratorKind::Exponential) j["gamma"] = g.parameter();
  if (g.kind() == GeneratorKind::Custom) j["name"] = g.name();
  return j;
}

AggregationFunction aggregator_from_json(const Json& j) {
  const std::string where = "aggregator";
  const std::string family = require_string(j, "family", where);
  return rethrow_as_config(where + " '" + family + "'", [&] {
    if (family == "quasi_linear") {
      return AggregationFunction::quasi_linear_mean(generator_from_json(require(j, "generator", where)),
                                                    require_number(j, "weight", where));
    }
    if (family == "schur_pair") return AggregationFunction::schur_pair_mean(generator_from_json(require(j, "f", where)));
    if (family == "tnorm") {
      return AggregationFunction::tnorm(AdditiveGeneratorTNorm(generator_from_json(require(j, "generator", where))));
    }
    if (family == "tconorm") {
      return AggregationFunction::tconorm(
          AdditiveGeneratorTConorm(generator_from_json(require(j, "generator", where))));
    }
    if (family == "k") return AggregationFunction::k_projection(require_number(j, "w", where));
    throw ConfigError("unknown aggregator family '" + family +
                      "'; supported families: quasi_linear, schur_pair, tnorm, tconorm, k");
  });
}

TotalOrderSpec order_from_json(const Json& j, const CheckOptions& opts) {
  const std::string where = "order";
  const std::string type = require_string(j, "type", where);
  return rethrow_as_config(where, [&] {
    if (type == "alpha_beta") {
      return TotalOrderSpec::alpha_beta(require_number(j, "alpha", where), require_number(j, "beta", where));
    }
    if (type == "lexicographic") return TotalOrderSpec::lexicographic();
    if (type == "antilexicographic") return TotalOrderSpec::antilexicographic();
    if (type == "xu_yager") return TotalOrderSpec::xu_yager();
    if (type == "information_quality") return TotalOrderSpec::information_quality();
    if (type == "generated") {
      auto a = aggregator_from_json(require(j, "a", where));
      auto b = aggregator_from_json(require(j, "b", where));
      const bool check = !j.contains("check") || j.at("check").get<bool>();
      return check ? TotalOrderSpec::generated(std::move(a), std::move(b), opts)
                   : TotalOrderSpec::generated_unchecked(std::move(a), std::move(b));
    }
    throw ConfigError("unknown order type '" + type +
                      "'; supported types: alpha_beta, generated, lexicographic, antilexicographic, xu_yager, "
                      "information_quality");
  });
}

Json to_json(const Interval& z) { return Json::array({z.lo(), z.hi()}); }

Json to_json(const Witness& w) {
  Json j;
  j["u"] = to_json(w.u);
  j["x"] = to_json(w.x);
  j["residual_a"] = w.residual_a;
  j["residual_b"] = w.residual_b;
  return j;
}

Json to_json(const AdmissibilityVerdict& v) {
  Json j;
  j["outcome"] = std::string(to_string(v.outcome));
  j["rule"] = v.rule;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["evidence"] = v.evidence;
  if (v.oracle_agrees) j["oracle_agrees"] = *v.oracle_agrees;
  return j;
}

Json to_json(const CoincidenceReport& r) {
  Json j;
  j["coincide"] = r.coincide;
  j["certainty"] = r.certainty;
  j["resolution"] = r.resolution;
  j["disagreements"] = r.disagreements;
  if (r.witness) {
    Json w;
    w["u"] = to_json(r.witness->u);
    w["x"] = to_json(r.witness->x);
    w["first"] = ordering_json(r.witness->first);
    w["second"] = ordering_json(r.witness->second);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["alpha_thresholds"] = r.alpha_thresholds;
  return j;
}

Json parse_json(std::istream& in, const std::string& what) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_json(in, path);
}

std::vector<Interval> read_intervals_csv(std::istream& in) {
  std::vector<Interval> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    const auto lo = comma == std::string::npos ? std::nullopt : parse_double(line.substr(0, comma));
    const auto hi = comma == std::string::npos ? std::nullopt : parse_double(line.substr(comma + 1));
    if (!lo || !hi) {
      if (out.empty() && lineno == 1) continue;  // header
      throw IoError("line " + std::to_string(lineno) + ": expected 'lo,hi'");
    }
    try {
      out.emplace_back(*lo, *hi);
    } catch (const std::invalid_argument& e) {
      throw IoError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Interval> read_intervals_json(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(e.what());
  }
  if (!j.is_array()) throw IoError("expected a JSON array of [lo, hi] pairs");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw IoError("element " + std::to_string(i) + ": expected [lo, hi]");
    }
    try {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } catch (const std::invalid_argument& ex) {
      throw IoError("element " + std::to_string(i) + ": " + ex.what());
    }
  }
  return out;
}

std::vector<Interval> read_intervals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  try {
    return json ? read_intervals_json(in) : read_intervals_csv(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_ranked_csv(std::ostream& out, const std::vector<Interval>& items, const std::vector<std::size_t>& order) {
  out << "rank,index,lo,hi\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Interval& z = items[order[r]];
    out << r + 1 << ',' << order[r] << ',' << format_double(z.lo()) << ',' << format_double(z.hi()) << '\n';
  }
}

void write_disagreements_csv(std::ostream& out, const std::vector<Disagreement>& rows) {
  out << "u_lo,u_hi,x_lo,x_hi,first,second\n";
  for (const auto& d : rows) {
    out << format_double(d.u.lo()) << ',' << format_double(d.u.hi()) << ',' << format_double(d.x.lo()) << ','
        << format_double(d.x.hi()) << ',' << to_string(d.first) << ',' << to_string(d.second) << '\n';
  }
}

}  // namespace intorder
