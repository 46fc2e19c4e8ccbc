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

#ifndef COTASK_TESTS_TEST_SUPPORT_H_
#define COTASK_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "cotask/harness.h"
#include "cotask/rng.h"

namespace cotask::testing {

inline std::filesystem::path source_dir() {
  return std::filesystem::path(COTASK_SOURCE_DIR);
}

inline std::filesystem::path scenario_path(const std::string& name) {
  return source_dir() / "scenarios" / name;
}

inline std::filesystem::path test_data_path(const std::string& name) {
  return source_dir() / "tests" / "data" / name;
}

// Open W x H grid with stations at the given cells.
inline GridEnvironment open_grid(int width, int height,
                                 std::vector<Cell> stations) {
  return GridEnvironment(width, height, {}, std::move(stations));
}

// Random small environment: dimensions in [3, max_dim], ~15% obstacles,
// station_count stations on distinct free cells.
inline GridEnvironment random_environment(RngStream& rng, int max_dim = 5,
                                          int station_count = 2) {
  for (;;) {
    const int width = 3 + static_cast<int>(rng.uniform_below(max_dim - 2));
    const int height = 3 + static_cast<int>(rng.uniform_below(max_dim - 2));
    std::vector<Cell> obstacles;
    std::vector<Cell> free_cells;
    for (int y = 1; y <= height; ++y) {
      for (int x = 1; x <= width; ++x) {
        if (rng.uniform01() < 0.15) {
          obstacles.push_back({x, y});
        } else {
          free_cells.push_back({x, y});
        }
      }
    }
    if (static_cast<int>(free_cells.size()) < station_count + 1) continue;
    std::vector<Cell> stations;
    for (int s = 0; s < station_count; ++s) {
      const auto pick = rng.uniform_below(free_cells.size());
      stations.push_back(free_cells[pick]);
      free_cells.erase(free_cells.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return GridEnvironment(width, height, obstacles, std::move(stations));
  }
}

// Random task against a given environment and cycle length.
inline Task random_task(RngStream& rng, const GridEnvironment& env,
                        int cycle_length, int robot_count) {
  std::vector<Cell> free_cells;
  for (int y = 1; y <= env.height(); ++y)
    for (int x = 1; x <= env.width(); ++x)
      if (env.feasible({x, y})) free_cells.push_back({x, y});
  Task task;
  task.location = free_cells[rng.uniform_below(free_cells.size())];
  task.arrival = static_cast<int>(rng.uniform_below(cycle_length));
  task.departure =
      task.arrival + 1 +
      static_cast<int>(rng.uniform_below(cycle_length - task.arrival));
  task.required_count = 1 + static_cast<int>(rng.uniform_below(robot_count));
  // Quarter-unit values in [0.25, 2] keep fixed-point arithmetic honest.
  task.value = Value::from_micros((1 + static_cast<std::int64_t>(
                                           rng.uniform_below(8))) *
                                  250'000);
  return task;
}

// Random small scenario within the desk-scale property-test bounds
// (dimensions <= max_dim, cycle length <= max_cycle, robots <= max_robots).
inline Scenario random_scenario(RngStream& rng, int max_dim = 5,
                                int max_cycle = 4, int max_robots = 2,
                                int max_tasks = 3) {
  const int station_count = 1 + static_cast<int>(rng.uniform_below(2));
  GridEnvironment env = random_environment(rng, max_dim, station_count);
  // Bias toward the upper end of the permitted cycle lengths so joint
  // action spaces are meaningfully large.
  const int cycle_length =
      max_cycle < 2 ? 1 : 2 + static_cast<int>(rng.uniform_below(max_cycle - 1));
  const int robots = 1 + static_cast<int>(rng.uniform_below(max_robots));
  std::vector<int> robot_stations;
  for (int i = 0; i < robots; ++i)
    robot_stations.push_back(
        static_cast<int>(rng.uniform_below(station_count)));
  const int task_count = 1 + static_cast<int>(rng.uniform_below(max_tasks));
  std::vector<Task> tasks;
  for (int j = 0; j < task_count; ++j)
    tasks.push_back(random_task(rng, env, cycle_length, robots));
  return Scenario{std::move(env),
                  cycle_length,
                  std::move(robot_stations),
                  std::move(tasks),
                  LearnerParams{0.05, 1.0},
                  std::nullopt,
                  true,
                  rng.next()};
}

// Uniform-ish random feasible trajectory by a guided walk: every step picks
// among the neighbors that can still make it back to the station in time.
// Samples the whole feasible set (not just the reduced one).
inline Trajectory random_trajectory(const GridEnvironment& env, Cell station,
                                    int cycle_length, RngStream& rng) {
  const std::vector<int> dist = env.hop_distances(station);
  Trajectory traj;
  traj.cells.reserve(cycle_length + 1);
  traj.cells.push_back(station);
  for (int t = 0; t < cycle_length; ++t) {
    const int remaining = cycle_length - t - 1;
    std::vector<Cell> options;
    for (Cell n : env.neighbors(traj.cells.back())) {
      const int d = dist[env.cell_index(n)];
      if (d >= 0 && d <= remaining) options.push_back(n);
    }
    traj.cells.push_back(options[rng.uniform_below(options.size())]);
  }
  return traj;
}

inline ActionProfile random_profile(const Scenario& scenario, RngStream& rng) {
  ActionProfile profile;
  for (int st : scenario.robot_stations)
    profile.trajectories.push_back(
        random_trajectory(scenario.environment,
                          scenario.environment.stations()[st],
                          scenario.cycle_length, rng));
  return profile;
}

// Shared instance suite so the optimum-preservation and minimality
// acceptance checks run on identical scenarios.
inline std::vector<Scenario> property_suite(int count, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<Scenario> scenarios;
  scenarios.reserve(count);
  for (int i = 0; i < count; ++i) scenarios.push_back(random_scenario(rng));
  return scenarios;
}

}  // namespace cotask::testing

#endif  // COTASK_TESTS_TEST_SUPPORT_H_
