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

#ifndef COTASK_HARNESS_H_
#define COTASK_HARNESS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cotask/environment.h"
#include "cotask/learning.h"
#include "cotask/scoring.h"
#include "cotask/trajectory.h"
#include "cotask/value.h"

namespace cotask {

// A complete experiment definition: the world, the game shape, and the
// learner configuration.
struct Scenario {
  GridEnvironment environment;
  int cycle_length = 1;
  std::vector<int> robot_stations;  // 0-based indices into stations()
  std::vector<Task> tasks;
  LearnerParams learner;
  std::optional<int> initial_action;  // empty: uniform draw per robot
  bool pruning = true;
  std::uint64_t seed = 0;

  int robot_count() const { return static_cast<int>(robot_stations.size()); }
  Value max_total_value() const;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

std::uint64_t scenario_fingerprint(const Scenario& scenario);

// Per-robot action sets. Robots sharing a station share one computed set.
struct Game {
  std::vector<std::shared_ptr<const ActionSet>> robot_actions;
  std::vector<std::size_t> feasible_counts;  // |P_i| before any reduction
  std::map<int, std::shared_ptr<const ActionSet>> by_station;
};

// Enumerates every robot's feasible trajectories and reduces them when
// scenario.pruning is set; with pruning disabled the action set is the full
// feasible set.
Game build_game(const Scenario& scenario,
                std::size_t enumeration_limit = kDefaultEnumerationLimit);

enum class TraceDetail {
  kFull,        // per-robot utilities, actions, experimentation flags
  kValuesOnly,  // just the per-cycle total value
};

// Per-cycle record of a repeated play, cycle-major. Per-robot columns are
// only populated at TraceDetail::kFull.
struct RunTrace {
  int robot_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t scenario_hash = 0;
  std::vector<Value> f;                       // total value per cycle
  std::vector<Value> utilities;               // [cycle * n + robot]
  std::vector<std::uint32_t> actions;         // [cycle * n + robot]
  std::vector<std::uint8_t> experimented;     // [cycle * n + robot]

  std::size_t cycles() const { return f.size(); }
  bool full_detail() const { return !utilities.empty() || f.empty(); }
};

// Repeated play: materialize the joint action, score it, log it, then let
// every learner update on its realized utility. Deterministic given seed.
RunTrace run(const Scenario& scenario, const Game& game, std::size_t cycles,
             std::uint64_t seed, TraceDetail detail = TraceDetail::kFull);
RunTrace run(const Scenario& scenario, std::size_t cycles);

// Prefix averages of f; the last element estimates the long-run average at
// the run horizon.
std::vector<double> long_run_average(const RunTrace& trace);
double final_long_run_average(const RunTrace& trace);

// Fraction of cycles with f exactly equal to `value` among cycles >=
// from_cycle.
double fraction_at_value(const RunTrace& trace, Value value,
                         std::size_t from_cycle);

// Earliest cycle t such that f equals `value` in at least `threshold` of
// the cycles in [t, t + window); empty if no window qualifies.
std::optional<std::size_t> first_sustained_completion(const RunTrace& trace,
                                                      Value value,
                                                      std::size_t window,
                                                      double threshold);

inline constexpr std::size_t kDefaultEvalLimit = 100'000'000;

struct Optimum {
  Value best;
  std::vector<std::size_t> profile;  // action index per robot
  std::size_t evaluations = 0;
};

// Exhaustive maximization of the total value over the joint action space,
// with a deterministic lexicographic tie-break. Refuses with LimitError if
// the product space exceeds eval_limit.
Optimum brute_force_optimum(const Scenario& scenario, bool use_pruned,
                            std::size_t eval_limit = kDefaultEvalLimit);

// Same search over caller-supplied per-robot sets.
Optimum brute_force_over(
    const std::vector<const std::vector<Trajectory>*>& sets,
    std::span<const Task> tasks, int cycle_length,
    std::size_t eval_limit = kDefaultEvalLimit);

// Seeded replicate batch. Replicate r runs with seed base_seed + r;
// replicates execute concurrently over the shared immutable game.
struct BatchOptions {
  std::size_t cycles = 1;
  std::uint64_t base_seed = 0;
  int replicates = 1;
  TraceDetail detail = TraceDetail::kValuesOnly;
  int threads = 0;                  // <= 0: hardware concurrency
  std::optional<Value> target;      // value whose occupancy is measured
  std::size_t tail_cycles = 0;      // 0: last 20% of the run
  std::size_t window = 10'000;      // sustained-completion window
  double threshold = 0.95;
};

struct ReplicateMetrics {
  std::uint64_t seed = 0;
  double final_average = 0.0;
  std::optional<double> fraction_at_target;
  std::optional<std::size_t> first_sustained;
};

// The sink, when given, receives each finished trace (serialized by an
// internal lock) before it is discarded.
std::vector<ReplicateMetrics> run_replicates(
    const Scenario& scenario, const Game& game, const BatchOptions& options,
    const std::function<void(int, const RunTrace&)>& sink = nullptr);

// CSV with columns: cycle, f, then utility_i, action_i, experimenting_i per
// robot. Values print in exact decimal form, so output is byte-reproducible.
void write_trace_csv(const RunTrace& trace, std::ostream& os);

}  // namespace cotask

#endif  // COTASK_HARNESS_H_
