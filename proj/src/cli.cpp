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

#include "intorder/cli.hpp"

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "intorder/battery.hpp"
#include "intorder/io.hpp"

namespace intorder {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_config(const RunConfig& c) {
  if (c.config_path.empty()) throw ConfigError("--config is required for this command");
  return load_json_file(c.config_path);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("config: missing field '") + key + "'");
  return j.at(key);
}

PairSpec pair_from_config(const Json& j) {
  const Json& p = j.is_object() && j.contains("pair") ? j.at("pair") : j;
  return {aggregator_from_json(field(p, "a")), aggregator_from_json(field(p, "b"))};
}

CheckOptions check_options(const RunConfig& c) {
  CheckOptions o;
  o.tol = c.tol;
  o.threads = c.threads;
  o.oracle_resolution = c.resolution.value_or(200);
  return o;
}

std::string battery_table(const std::vector<BatteryRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(58) << "group" << std::setw(44) << "pair" << std::setw(15) << "expected"
     << std::setw(15) << "verdict" << std::setw(20) << "rule"
     << "agree\n";
  int disagreements = 0;
  for (const auto& r : rows) {
    if (!r.agrees()) ++disagreements;
    os << std::setw(58) << r.item.group << std::setw(44) << r.item.label << std::setw(15)
       << to_string(r.item.expected) << std::setw(15) << to_string(r.verdict.outcome) << std::setw(20)
       << r.verdict.rule << (r.agrees() ? "yes" : "NO") << '\n';
  }
  os << rows.size() << " pairs, " << disagreements << " disagreements\n";
  return os.str();
}

std::string check_pair_report(const RunConfig& c) {
  const PairSpec pair = pair_from_config(load_config(c));
  return dump(to_json(check_pair(pair, check_options(c))));
}

std::string counterexample_report(const RunConfig& c) {
  const PairSpec pair = pair_from_config(load_config(c));
  const int res = c.resolution.value_or(200);
  const auto w = oracle_search(pair.a, pair.b, res, c.tol, c.threads);
  Json j;
  j["resolution"] = res;
  if (w) {
    j["witness"] = to_json(*w);
  } else {
    j["witness"] = nullptr;
    j["message"] = "none at resolution " + std::to_string(res);
  }
  return dump(j);
}

std::string rank_report(const RunConfig& c, std::ostream& err) {
  const Json cfg = load_config(c);
  const TotalOrderSpec spec = order_from_json(field(cfg, "order"), check_options(c));
  if (spec.verdict() && spec.verdict()->outcome == Outcome::Unknown) {
    err << "warning: admissibility of " << spec.name() << " is unknown: " << spec.verdict()->evidence << '\n';
  }
  if (c.input_path.empty()) throw ConfigError("--input is required for rank");
  const auto items = read_intervals(c.input_path);
  const auto order = rank_indices(spec, items);

  if (c.verify_triples > 0 && !items.empty()) {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
    int violations = 0;
    for (int k = 0; k < c.verify_triples; ++k) {
      const Interval& u = items[pick(rng)];
      const Interval& v = items[pick(rng)];
      const Interval& x = items[pick(rng)];
      if (compare(spec, u, v) != Ordering::Greater && compare(spec, v, x) != Ordering::Greater &&
          compare(spec, u, x) == Ordering::Greater) {
        ++violations;
      }
    }
    err << "transitivity: " << c.verify_triples << " triples, " << violations << " violations\n";
  }

  std::ostringstream os;
  write_ranked_csv(os, items, order);
  return os.str();
}

std::string coincide_report(const RunConfig& c) {
  const Json cfg = load_config(c);
  const CheckOptions opts = check_options(c);
  const TotalOrderSpec first = order_from_json(field(cfg, "first"), opts);
  const TotalOrderSpec second = order_from_json(field(cfg, "second"), opts);
  const int res = c.resolution.value_or(100);
  const CoincidenceReport report = orders_coincide(first, second, res, c.threads);
  if (!c.dump_path.empty()) {
    std::ofstream out(c.dump_path);
    if (!out) throw IoError("cannot write '" + c.dump_path + "'");
    write_disagreements_csv(out, all_disagreements(first, second, res));
    if (!out) throw IoError("write failed for '" + c.dump_path + "'");
  }
  return dump(to_json(report));
}

void validate(const RunConfig& c) {
  if (c.resolution && *c.resolution < 16) throw ConfigError("--resolution must be at least 16");
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.threads < 1) throw ConfigError("--threads must be at least 1");
  if (c.verify_triples < 0) throw ConfigError("--verify must be non-negative");
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    std::string report;
    switch (c.command) {
      case Command::CheckPair: report = check_pair_report(c); break;
      case Command::Rank: report = rank_report(c, err); break;
      case Command::FindCounterexample: report = counterexample_report(c); break;
      case Command::Coincide: report = coincide_report(c); break;
      case Command::Battery: report = battery_table(run_battery(reference_battery(), check_options(c))); break;
    }
    if (c.output_path.empty()) {
      out << report;
    } else {
      std::ofstream f(c.output_path, std::ios::binary);
      if (!f) throw IoError("cannot write '" + c.output_path + "'");
      f << report;
      if (!f) throw IoError("write failed for '" + c.output_path + "'");
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissible total orders on intervals of [0, 1]"};
  app.require_subcommand(1);

  RunConfig c;
  int resolution = 0;
  app.add_option("--resolution", resolution, "Grid resolution (>= 16)");
  app.add_option("--tol", c.tol, "Residual tolerance")->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for randomized sampling")->capture_default_str();
  app.add_option("--output", c.output_path, "Report path (default: standard output)");

  auto* check = app.add_subcommand("check-pair", "Decide admissibility of a pair of aggregation functions");
  auto* rank = app.add_subcommand("rank", "Sort intervals by a total order");
  auto* find = app.add_subcommand("find-counterexample", "Search for a witness of non-admissibility");
  auto* coincide = app.add_subcommand("coincide", "Compare two total orders on the interval grid");
  auto* battery = app.add_subcommand("battery", "Run the reference verdict battery");

  for (auto* sub : {check, rank, find, coincide}) {
    sub->add_option("--config", c.config_path, "JSON config document")->required();
  }
  rank->add_option("--input", c.input_path, "Intervals as CSV or JSON")->required();
  rank->add_option("--verify", c.verify_triples, "Check transitivity on N seeded random triples");
  coincide->add_option("--dump", c.dump_path, "Write every disagreement as CSV");
  for (auto* sub : {check, rank, find, coincide, battery}) {
    sub->add_option("--resolution", resolution, "Grid resolution (>= 16)");
    sub->add_option("--tol", c.tol, "Residual tolerance");
    sub->add_option("--threads", c.threads, "Worker threads");
    sub->add_option("--seed", c.seed, "Seed for randomized sampling");
    sub->add_option("--output", c.output_path, "Report path (default: standard output)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitConfig;
  }

  if (check->parsed()) c.command = Command::CheckPair;
  if (rank->parsed()) c.command = Command::Rank;
  if (find->parsed()) c.command = Command::FindCounterexample;
  if (coincide->parsed()) c.command = Command::Coincide;
  if (battery->parsed()) c.command = Command::Battery;
  if (resolution != 0) c.resolution = resolution;
  return run(c, out, err);
}

}  // namespace intorder
