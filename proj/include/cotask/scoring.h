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

#ifndef COTASK_SCORING_H_
#define COTASK_SCORING_H_

#include <optional>
#include <span>
#include <vector>

#include "cotask/environment.h"
#include "cotask/trajectory.h"
#include "cotask/value.h"

namespace cotask {

// A cooperative task: completed if at least required_count robots hold
// `location` simultaneously for one step starting within [arrival,
// departure - 1].
struct Task {
  int required_count = 1;
  Cell location;
  int arrival = 0;
  int departure = 1;
  Value value;

  friend bool operator==(const Task&, const Task&) = default;
};

// Joint action: one trajectory per robot, all with the same cycle length.
struct ActionProfile {
  std::vector<Trajectory> trajectories;
};

// Everything the harness needs from one cycle, computed in a single pass
// over the counters.
struct ScoreReport {
  std::vector<int> completed;  // ascending task indices
  Value total;                 // sum of completed task values
  std::vector<std::optional<int>> completion_times;  // one slot per task
  std::vector<Value> utilities;                      // one slot per robot
};

// Number of robots holding `location` over [t, t+1]. t must lie in
// [0, T-1].
int stay_counter(const ActionProfile& profile, Cell location, int t);

// Indices of tasks completed under the profile, ascending.
std::vector<int> completed_tasks(const ActionProfile& profile,
                                 std::span<const Task> tasks);

// Earliest admissible step at which the task's counter reaches its
// requirement; nullopt if the task is not completed.
std::optional<int> completion_time(const ActionProfile& profile,
                                   const Task& task);

// Sum of values over completed tasks, accumulated in task-index order.
Value total_value(const ActionProfile& profile, std::span<const Task> tasks);

// Marginal-contribution utility of one robot: the value of tasks that are
// completed with it but would not be completed if it were removed from the
// system. Literally recomputes the completed set on the reduced profile.
Value wonderful_life_utility(const ActionProfile& profile,
                             std::span<const Task> tasks, int robot);

ScoreReport score_report(const ActionProfile& profile,
                         std::span<const Task> tasks);

// Allocation-free scoring core used by the cycle loop: same arithmetic and
// summation order as the operations above, writing into reusable buffers.
struct ScoreScratch {
  std::vector<int> counters;  // task-major [task * T + t], window cells only
};

void score_profile(std::span<const Trajectory* const> profile,
                   std::span<const Task> tasks, ScoreScratch& scratch,
                   ScoreReport& report);

}  // namespace cotask

#endif  // COTASK_SCORING_H_
