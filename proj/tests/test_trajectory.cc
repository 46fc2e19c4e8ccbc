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

#include "cotask/trajectory.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"

#include "cotask/errors.h"
#include "cotask/rng.h"
#include "test_support.h"

using namespace cotask;

namespace {

// Independent enumeration oracle: plain depth-first over all neighbors with
// no reachability cutoff, filtering on the return condition at the end.
void naive_extend(const GridEnvironment& env, Cell station, int cycle_length,
                  std::vector<Cell>& path, std::vector<Trajectory>& out) {
  if (static_cast<int>(path.size()) == cycle_length + 1) {
    if (path.back() == station) out.push_back(Trajectory{path});
    return;
  }
  for (Cell n : env.neighbors(path.back())) {
    path.push_back(n);
    naive_extend(env, station, cycle_length, path, out);
    path.pop_back();
  }
}

std::vector<Trajectory> naive_enumerate(const GridEnvironment& env,
                                        Cell station, int cycle_length) {
  std::vector<Trajectory> out;
  std::vector<Cell> path{station};
  naive_extend(env, station, cycle_length, path, out);
  std::sort(out.begin(), out.end());
  return out;
}

Trajectory traj(std::initializer_list<Cell> cells) {
  return Trajectory{std::vector<Cell>(cells)};
}

// The nine reduced actions for a station with a free 3x3 surrounding at
// cycle length 3: hop out, hold one step, hop back -- plus holding the
// station for the whole cycle.
std::vector<Trajectory> pocket_nine(Cell s) {
  std::vector<Trajectory> nine;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy) {
      const Cell a{s.x + dx, s.y + dy};
      nine.push_back(traj({s, a, a, s}));
    }
  std::sort(nine.begin(), nine.end());
  return nine;
}

}  // namespace

TEST_SUITE("trajectory") {

TEST_CASE("cycle length 1 leaves only the all-stay loop") {
  const GridEnvironment env = parse_environment("...\n.1.\n...");
  const auto all = enumerate_feasible(env, {2, 2}, 1);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == traj({{2, 2}, {2, 2}}));
}

TEST_CASE("cycle length 2 reaches exactly the neighborhood") {
  const GridEnvironment env = parse_environment("...\n.1.\n...");
  const auto all = enumerate_feasible(env, {2, 2}, 2);
  std::vector<Trajectory> expected;
  for (Cell q : env.neighbors({2, 2}))
    expected.push_back(traj({{2, 2}, q, {2, 2}}));
  std::sort(expected.begin(), expected.end());
  CHECK(all == expected);
  CHECK(all.size() == 9);
}

TEST_CASE("free 3x3 pocket at cycle length 3 has 49 trajectories") {
  const GridEnvironment env =
      parse_environment(".....\n.....\n.....\n.1...\n.....");
  const auto all = enumerate_feasible(env, {2, 2}, 3);
  CHECK(all.size() == 49);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const Trajectory& t : all) {
    CHECK(t.cells.front() == Cell{2, 2});
    CHECK(t.cells.back() == Cell{2, 2});
  }
}

TEST_CASE("enumeration agrees with the cutoff-free oracle") {
  RngStream rng(555);
  for (int round = 0; round < 20; ++round) {
    const GridEnvironment env = testing::random_environment(rng, 4, 1);
    const int cycle_length = 1 + static_cast<int>(rng.uniform_below(4));
    const Cell station = env.stations()[0];
    CHECK(enumerate_feasible(env, station, cycle_length) ==
          naive_enumerate(env, station, cycle_length));
  }
}

TEST_CASE("a walled-in station can only hold its cell") {
  const GridEnvironment env = parse_environment("###\n#1#\n###");
  const auto all = enumerate_feasible(env, {2, 2}, 6);
  REQUIRE(all.size() == 1);
  CHECK(stay_signature(all[0]).stays.size() == 6);
  CHECK(prune_action_set(all).size() == 1);
}

TEST_CASE("enumeration guards") {
  const GridEnvironment env = parse_environment("1..");
  CHECK_THROWS_AS(enumerate_feasible(env, {3, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_feasible(env, {1, 1}, 0), std::invalid_argument);
  const GridEnvironment open =
      parse_environment(".....\n.....\n..1..\n.....\n.....");
  CHECK_THROWS_AS(enumerate_feasible(open, {3, 3}, 4, 10), LimitError);
}

TEST_CASE("stay signatures") {
  const Cell s{2, 2};
  CHECK(stay_signature(traj({s, s, s, s})).stays ==
        std::vector<StayEvent>{{0, s}, {1, s}, {2, s}});
  CHECK(stay_signature(traj({s, {1, 1}, {1, 1}, s})).stays ==
        std::vector<StayEvent>{{1, {1, 1}}});
  CHECK(stay_signature(traj({s, {1, 1}, {2, 1}, s})).empty());
}

TEST_CASE("signature containment") {
  const Cell s{2, 2};
  const auto all_stay = stay_signature(traj({s, s, s, s}));
  const auto first_stay = stay_signature(traj({s, s, {1, 1}, s}));
  CHECK(all_stay.contains(first_stay));
  CHECK_FALSE(first_stay.contains(all_stay));
  CHECK(all_stay.contains(all_stay));
  CHECK(first_stay.contains(StaySignature{}));  // empty is contained in all
}

TEST_CASE("49 feasible trajectories reduce to the nine expected actions") {
  const GridEnvironment env =
      parse_environment(".....\n.....\n.....\n.1...\n.....");
  const auto all = enumerate_feasible(env, {2, 2}, 3);
  const ActionSet pruned = prune_action_set(all);
  CHECK(pruned.actions == pocket_nine({2, 2}));
}

TEST_CASE("cycle length 2 prunes to the all-stay loop alone") {
  const GridEnvironment env = parse_environment("...\n.1.\n...");
  const auto all = enumerate_feasible(env, {2, 2}, 2);
  const ActionSet pruned = prune_action_set(all);
  REQUIRE(pruned.size() == 1);
  CHECK(pruned.actions[0] == traj({{2, 2}, {2, 2}, {2, 2}}));
}

TEST_CASE("pairwise-incomparable signatures are kept whole") {
  const Cell s{2, 2};
  const std::vector<Trajectory> input{
      traj({s, {1, 1}, {1, 1}, s}),
      traj({s, {1, 2}, {1, 2}, s}),
      traj({s, {2, 1}, {2, 1}, s}),
  };
  const ActionSet pruned = prune_action_set(input);
  CHECK(pruned.actions == input);
}

TEST_CASE("pruning rejects empty input") {
  CHECK_THROWS_AS(prune_action_set({}), std::invalid_argument);
}

TEST_CASE("verifier accepts the pocket reduction") {
  const GridEnvironment env =
      parse_environment(".....\n.....\n.....\n.1...\n.....");
  const auto all = enumerate_feasible(env, {2, 2}, 3);
  const ActionSet pruned = prune_action_set(all);
  const VerifyResult ok = verify_action_set(all, pruned);
  CHECK(ok.ok);
  CHECK(ok.diagnostic.empty());
}

TEST_CASE("verifier catches a deleted action") {
  const GridEnvironment env =
      parse_environment(".....\n.....\n.....\n.1...\n.....");
  const auto all = enumerate_feasible(env, {2, 2}, 3);
  ActionSet broken = prune_action_set(all);
  broken.actions.erase(broken.actions.begin() + 3);
  const VerifyResult bad = verify_action_set(all, broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("coverage") != std::string::npos);
}

TEST_CASE("verifier catches a redundant action") {
  const GridEnvironment env =
      parse_environment(".....\n.....\n.....\n.1...\n.....");
  const auto all = enumerate_feasible(env, {2, 2}, 3);
  ActionSet padded = prune_action_set(all);
  // In the feasible set, has a stay, but its signature is dominated by the
  // all-stay loop.
  padded.actions.push_back(traj({{2, 2}, {2, 2}, {1, 1}, {2, 2}}));
  const VerifyResult bad = verify_action_set(all, padded);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("minimality") != std::string::npos);
}

TEST_CASE("verifier catches foreign and stay-free members") {
  const GridEnvironment env = parse_environment("...\n.1.\n...");
  const auto all = enumerate_feasible(env, {2, 2}, 2);
  ActionSet foreign = prune_action_set(all);
  foreign.actions.push_back(traj({{9, 9}, {9, 9}, {9, 9}}));
  CHECK(verify_action_set(all, foreign).diagnostic.find("membership") !=
        std::string::npos);

  ActionSet stayless;
  stayless.actions = {traj({{2, 2}, {1, 1}, {2, 2}})};
  CHECK(verify_action_set(all, stayless).diagnostic.find("stay") !=
        std::string::npos);
}

TEST_CASE("pruning properties on random instances") {
  RngStream rng(808);
  for (int round = 0; round < 25; ++round) {
    const GridEnvironment env = testing::random_environment(rng, 5, 1);
    const int cycle_length = 1 + static_cast<int>(rng.uniform_below(4));
    const Cell station = env.stations()[0];
    const auto all = enumerate_feasible(env, station, cycle_length);
    const ActionSet pruned = prune_action_set(all);

    CHECK(pruned.size() >= 1);
    CHECK(pruned.size() <= all.size());
    CHECK(std::is_sorted(pruned.actions.begin(), pruned.actions.end()));
    for (const Trajectory& p : pruned.actions)
      CHECK(std::binary_search(all.begin(), all.end(), p));

    // Every excluded trajectory's stays are covered by some kept action.
    for (const Trajectory& q : all) {
      const StaySignature sig = stay_signature(q);
      bool covered = false;
      for (const Trajectory& p : pruned.actions)
        if (stay_signature(p).contains(sig)) {
          covered = true;
          break;
        }
      CHECK(covered);
    }

    CHECK(verify_action_set(all, pruned).ok);
    CHECK(prune_action_set(all).actions == pruned.actions);  // deterministic
  }
}

TEST_CASE("cache round trip and key validation") {
  const GridEnvironment env =
      parse_environment(".....\n.....\n.....\n.1...\n.....");
  const auto all = enumerate_feasible(env, {2, 2}, 3);
  const ActionSet pruned = prune_action_set(all);

  std::stringstream buffer;
  write_action_cache(buffer, env, {2, 2}, 3, pruned);
  const ActionSet loaded = read_action_cache(buffer, env, {2, 2}, 3);
  CHECK(loaded.actions == pruned.actions);

  std::stringstream again;
  write_action_cache(again, env, {2, 2}, 3, pruned);
  const GridEnvironment other = parse_environment("...\n.1.\n...");
  CHECK_THROWS_AS(read_action_cache(again, other, {2, 2}, 3), ParseError);
}

}  // TEST_SUITE
