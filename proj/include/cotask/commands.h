// Copyright 2026 The Cotask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COTASK_COMMANDS_H_
#define COTASK_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cotask {

// Process exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;        // I/O and unexpected failures
inline constexpr int kExitParseError = 2;   // malformed scenario/map/cache
inline constexpr int kExitLimit = 3;        // size-limit refusal
inline constexpr int kExitVerifyFailed = 4; // a verification check failed

struct BuildOptions {
  std::string scenario_path;
  std::optional<std::string> cache_dir;  // write per-station action caches
};

struct RunOptions {
  std::string scenario_path;
  std::size_t cycles = 100'000;
  std::optional<std::uint64_t> seed;  // default: the scenario's seed
  int replicates = 1;
  std::string out_dir;  // default: $COTASK_OUT_DIR or "."
  bool no_prune = false;
  bool no_oracle = false;
  int threads = 0;
  std::size_t window = 10'000;
  double threshold = 0.95;
  double tail_fraction = 0.2;
  std::optional<std::string> target_value;  // decimal; default: the optimum
};

struct VerifyOptions {
  std::string scenario_path;
  int trials = 1000;
  std::size_t eval_limit = 100'000'000;
  std::optional<std::string> cache_dir;  // verify cached sets instead
  std::uint64_t seed = 20260808;
};

// Prints per-robot feasible-trajectory and action counts; optionally writes
// action-set cache files.
int cmd_build(const BuildOptions& options, std::ostream& out,
              std::ostream& err);

// Runs seeded replicates, writing one trace CSV per replicate plus
// summary.json into the output directory.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

// Checks the action-set constraints per robot, the pruned/full optimum
// equality (when the joint space fits the limit), and the exact
// potential-game deviation identity on randomized trials.
int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace cotask

#endif  // COTASK_COMMANDS_H_
