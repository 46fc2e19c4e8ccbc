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

#include "cotask/scoring.h"

#include <algorithm>
#include <stdexcept>

namespace cotask {

int stay_counter(const ActionProfile& profile, Cell location, int t) {
  if (profile.trajectories.empty()) return 0;
  const int steps = profile.trajectories.front().steps();
  if (t < 0 || t >= steps)
    throw std::invalid_argument("stay counter time " + std::to_string(t) +
                                " outside [0, " + std::to_string(steps - 1) +
                                "]");
  int count = 0;
  for (const Trajectory& traj : profile.trajectories)
    if (traj.stays_at(t, location)) ++count;
  return count;
}

std::vector<int> completed_tasks(const ActionProfile& profile,
                                 std::span<const Task> tasks) {
  std::vector<int> completed;
  for (std::size_t j = 0; j < tasks.size(); ++j)
    if (completion_time(profile, tasks[j]).has_value())
      completed.push_back(static_cast<int>(j));
  return completed;
}

std::optional<int> completion_time(const ActionProfile& profile,
                                   const Task& task) {
  if (profile.trajectories.empty()) return std::nullopt;
  for (int t = task.arrival; t < task.departure; ++t)
    if (stay_counter(profile, task.location, t) >= task.required_count)
      return t;
  return std::nullopt;
}

Value total_value(const ActionProfile& profile, std::span<const Task> tasks) {
  Value total;
  for (int j : completed_tasks(profile, tasks)) total += tasks[j].value;
  return total;
}

Value wonderful_life_utility(const ActionProfile& profile,
                             std::span<const Task> tasks, int robot) {
  const int n = static_cast<int>(profile.trajectories.size());
  if (robot < 0 || robot >= n)
    throw std::invalid_argument("robot index " + std::to_string(robot) +
                                " outside [0, " + std::to_string(n - 1) + "]");
  ActionProfile without;
  without.trajectories.reserve(n - 1);
  for (int i = 0; i < n; ++i)
    if (i != robot) without.trajectories.push_back(profile.trajectories[i]);

  const std::vector<int> with_robot = completed_tasks(profile, tasks);
  const std::vector<int> without_robot = completed_tasks(without, tasks);

  Value utility;
  for (int j : with_robot) {
    if (!std::binary_search(without_robot.begin(), without_robot.end(), j))
      utility += tasks[j].value;
  }
  return utility;
}

void score_profile(std::span<const Trajectory* const> profile,
                   std::span<const Task> tasks, ScoreScratch& scratch,
                   ScoreReport& report) {
  const int n = static_cast<int>(profile.size());
  const int steps = n == 0 ? 0 : profile[0]->steps();
  const int k = static_cast<int>(tasks.size());

  report.completed.clear();
  report.total = Value{};
  report.completion_times.assign(k, std::nullopt);
  report.utilities.assign(n, Value{});
  scratch.counters.assign(static_cast<std::size_t>(k) * steps, 0);

  for (int j = 0; j < k; ++j) {
    const Task& task = tasks[j];
    for (int t = task.arrival; t < task.departure; ++t) {
      int count = 0;
      for (int i = 0; i < n; ++i)
        if (profile[i]->stays_at(t, task.location)) ++count;
      scratch.counters[static_cast<std::size_t>(j) * steps + t] = count;
      if (!report.completion_times[j] && count >= task.required_count)
        report.completion_times[j] = t;
    }
    if (report.completion_times[j]) {
      report.completed.push_back(j);
      report.total += task.value;
    }
  }

  // Marginal contributions from the same counters: removing robot i lowers
  // a counter by exactly its own stay, so no rescoring pass is needed.
  for (int i = 0; i < n; ++i) {
    Value utility;
    for (int j : report.completed) {
      const Task& task = tasks[j];
      bool completed_without = false;
      for (int t = task.arrival; t < task.departure && !completed_without;
           ++t) {
        const int count =
            scratch.counters[static_cast<std::size_t>(j) * steps + t];
        const int own = profile[i]->stays_at(t, task.location) ? 1 : 0;
        completed_without = count - own >= task.required_count;
      }
      if (!completed_without) utility += task.value;
    }
    report.utilities[i] = utility;
  }
}

ScoreReport score_report(const ActionProfile& profile,
                         std::span<const Task> tasks) {
  std::vector<const Trajectory*> view;
  view.reserve(profile.trajectories.size());
  for (const Trajectory& traj : profile.trajectories) view.push_back(&traj);
  ScoreScratch scratch;
  ScoreReport report;
  score_profile(view, tasks, scratch, report);
  return report;
}

}  // namespace cotask
