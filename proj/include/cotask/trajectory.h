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

#ifndef COTASK_TRAJECTORY_H_
#define COTASK_TRAJECTORY_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cotask/environment.h"

namespace cotask {

// A cyclic path of one robot over a cycle: cells[0..T], with cells[0] and
// cells[T] equal to the robot's station and every hop a legal move.
struct Trajectory {
  std::vector<Cell> cells;

  int steps() const { return static_cast<int>(cells.size()) - 1; }

  // True iff cells[t] == cells[t+1] == cells[t] (the robot holds a cell
  // over [t, t+1]); staying is the only way a robot contributes to a task.
  bool stays_at(int t, Cell c) const {
    return cells[t] == c && cells[t + 1] == c;
  }

  friend auto operator<=>(const Trajectory&, const Trajectory&) = default;
};

// "(2,2) (1,1) (1,1) (2,2)"
std::string to_string(const Trajectory& traj);

struct StayEvent {
  int step = 0;
  Cell cell;
  friend constexpr auto operator<=>(StayEvent, StayEvent) = default;
};

// The set of (step, cell) stay events of a trajectory; the fingerprint that
// decides which trajectories can ever be useful. At most one event per step,
// stored in ascending step order.
struct StaySignature {
  std::vector<StayEvent> stays;

  bool empty() const { return stays.empty(); }

  // True iff every stay of `other` is also a stay of *this.
  bool contains(const StaySignature& other) const;

  friend auto operator<=>(const StaySignature&, const StaySignature&) =
      default;
};

StaySignature stay_signature(const Trajectory& traj);

inline constexpr std::size_t kDefaultEnumerationLimit = 10'000'000;

// All feasible cyclic trajectories of length `cycle_length` from `station`,
// in lexicographic order of the cell sequence. Depth-first walk that extends
// a partial path only when the station is still reachable in the remaining
// steps (breadth-first hop distances double as the exact admissible bound,
// because holding a cell lets a robot spend surplus steps anywhere).
//
// Throws std::invalid_argument if station is not one of the environment's
// stations, and LimitError if the enumeration exceeds count_limit.
std::vector<Trajectory> enumerate_feasible(
    const GridEnvironment& env, Cell station, int cycle_length,
    std::size_t count_limit = kDefaultEnumerationLimit);

// The reduced per-robot action set: one representative per maximal stay
// signature, in lexicographic trajectory order.
struct ActionSet {
  std::vector<Trajectory> actions;

  std::size_t size() const { return actions.size(); }
};

// Reduces a full feasible-trajectory set to the smallest action set that
// (1) contains only trajectories with at least one stay and (2) covers the
// stays of every discarded trajectory. Concretely: drop empty signatures,
// collapse duplicates, keep exactly one representative (the
// lexicographically smallest trajectory) per inclusion-maximal signature.
// Any valid reduced set must contain a trajectory realizing each maximal
// signature, so this cardinality is minimal.
ActionSet prune_action_set(const std::vector<Trajectory>& all);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;  // violated constraint + witness when !ok
};

// Independent checker for a claimed reduced action set, by direct
// constraint evaluation: membership in `all`, at-least-one-stay, coverage
// of every excluded trajectory's stays, and cardinality equal to the
// number of distinct maximal signatures. Test oracle; deliberately shares
// no code with prune_action_set's selection logic.
VerifyResult verify_action_set(const std::vector<Trajectory>& all,
                               const ActionSet& pruned);

// Cache file I/O. A cache is keyed by (environment layout hash, station,
// cycle length) and stores one trajectory per line.
void write_action_cache(std::ostream& os, const GridEnvironment& env,
                        Cell station, int cycle_length,
                        const ActionSet& actions);
ActionSet read_action_cache(std::istream& is, const GridEnvironment& env,
                            Cell station, int cycle_length);

}  // namespace cotask

#endif  // COTASK_TRAJECTORY_H_
