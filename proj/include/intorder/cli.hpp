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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace intorder {

enum class Command { CheckPair, Rank, FindCounterexample, Coincide, Battery };

struct RunConfig {
  Command command = Command::Battery;
  std::string config_path;
  std::string input_path;
  /// Empty means standard output.
  std::string output_path;
  /// Disagreement CSV for `coincide`.
  std::string dump_path;
  /// Per-command default when unset: 200 for oracle searches, 100 for grid
  /// comparisons.
  std::optional<int> resolution;
  double tol = 1e-9;
  int threads = 1;
  std::uint64_t seed = 42;
  /// Random triples checked for transitivity by `rank`.
  int verify_triples = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;

/// Executes one command. Reports go to the output path (or `out`),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and calls run. Usage errors exit with kExitConfig.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace intorder
