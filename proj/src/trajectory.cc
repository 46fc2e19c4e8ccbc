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
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cotask/errors.h"

namespace cotask {

std::string to_string(const Trajectory& traj) {
  std::string out;
  for (std::size_t i = 0; i < traj.cells.size(); ++i) {
    if (i) out += ' ';
    out += to_string(traj.cells[i]);
  }
  return out;
}

bool StaySignature::contains(const StaySignature& other) const {
  // Both sides sorted by step with at most one event per step.
  auto it = stays.begin();
  for (const StayEvent& ev : other.stays) {
    while (it != stays.end() && it->step < ev.step) ++it;
    if (it == stays.end() || it->step != ev.step || it->cell != ev.cell)
      return false;
  }
  return true;
}

StaySignature stay_signature(const Trajectory& traj) {
  StaySignature sig;
  for (int t = 0; t < traj.steps(); ++t) {
    if (traj.cells[t] == traj.cells[t + 1])
      sig.stays.push_back({t, traj.cells[t]});
  }
  return sig;
}

std::vector<Trajectory> enumerate_feasible(const GridEnvironment& env,
                                           Cell station, int cycle_length,
                                           std::size_t count_limit) {
  const auto& stations = env.stations();
  if (std::find(stations.begin(), stations.end(), station) == stations.end())
    throw std::invalid_argument("station " + to_string(station) +
                                " is not a station of this environment");
  if (cycle_length < 1)
    throw std::invalid_argument("cycle length must be at least 1");

  const std::vector<int> dist = env.hop_distances(station);

  // Adjacency lists once, instead of a neighbors() allocation per node.
  const std::size_t cell_count =
      static_cast<std::size_t>(env.width()) * env.height();
  std::vector<std::vector<Cell>> adjacent(cell_count);
  for (int y = 1; y <= env.height(); ++y) {
    for (int x = 1; x <= env.width(); ++x) {
      Cell c{x, y};
      if (env.feasible(c)) adjacent[env.cell_index(c)] = env.neighbors(c);
    }
  }

  std::vector<Trajectory> out;
  std::vector<Cell> path;
  path.reserve(cycle_length + 1);
  path.push_back(station);

  auto extend = [&](auto&& self, int t) -> void {
    if (t == cycle_length) {
      out.push_back(Trajectory{path});
      if (out.size() > count_limit)
        throw LimitError("trajectory enumeration from " + to_string(station) +
                         " exceeds the count limit of " +
                         std::to_string(count_limit));
      return;
    }
    const int remaining = cycle_length - t - 1;
    for (Cell next : adjacent[env.cell_index(path.back())]) {
      const int d = dist[env.cell_index(next)];
      if (d < 0 || d > remaining) continue;
      path.push_back(next);
      self(self, t + 1);
      path.pop_back();
    }
  };
  extend(extend, 0);
  return out;  // lexicographic: neighbors are sorted, DFS preserves prefixes
}

ActionSet prune_action_set(const std::vector<Trajectory>& all) {
  if (all.empty())
    throw std::invalid_argument(
        "prune_action_set: empty trajectory set (the all-stay trajectory "
        "always exists, so this is a caller bug)");

  // Collapse duplicates: signature -> lexicographically smallest trajectory.
  std::map<StaySignature, const Trajectory*> representative;
  for (const Trajectory& traj : all) {
    StaySignature sig = stay_signature(traj);
    if (sig.empty()) continue;
    auto [it, inserted] = representative.try_emplace(std::move(sig), &traj);
    if (!inserted && traj < *it->second) it->second = &traj;
  }
  if (representative.empty())
    throw std::invalid_argument(
        "prune_action_set: no trajectory has a stay; input is not a complete "
        "feasible set");

  std::vector<const StaySignature*> signatures;
  std::vector<const Trajectory*> trajs;
  signatures.reserve(representative.size());
  for (const auto& [sig, traj] : representative) {
    signatures.push_back(&sig);
    trajs.push_back(traj);
  }

  ActionSet set;
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < signatures.size() && !dominated; ++j) {
      if (j == i) continue;
      // Map keys are distinct, so containment here is strict containment.
      if (signatures[j]->stays.size() > signatures[i]->stays.size() &&
          signatures[j]->contains(*signatures[i]))
        dominated = true;
    }
    if (!dominated) set.actions.push_back(*trajs[i]);
  }
  std::sort(set.actions.begin(), set.actions.end());
  return set;
}

VerifyResult verify_action_set(const std::vector<Trajectory>& all,
                               const ActionSet& pruned) {
  std::vector<Trajectory> sorted_all = all;
  std::sort(sorted_all.begin(), sorted_all.end());

  for (const Trajectory& p : pruned.actions) {
    if (!std::binary_search(sorted_all.begin(), sorted_all.end(), p))
      return {false,
              "membership: action set contains a trajectory that is not in "
              "the feasible set: " +
                  to_string(p)};
    if (stay_signature(p).empty())
      return {false, "stay constraint: action without any stay: " +
                         to_string(p)};
  }

  std::vector<StaySignature> pruned_sigs;
  pruned_sigs.reserve(pruned.actions.size());
  for (const Trajectory& p : pruned.actions)
    pruned_sigs.push_back(stay_signature(p));

  std::vector<Trajectory> sorted_pruned = pruned.actions;
  std::sort(sorted_pruned.begin(), sorted_pruned.end());
  for (const Trajectory& q : all) {
    if (std::binary_search(sorted_pruned.begin(), sorted_pruned.end(), q))
      continue;
    const StaySignature sig = stay_signature(q);
    // A trajectory without stays is covered vacuously.
    bool covered = sig.empty();
    for (std::size_t i = 0; i < pruned_sigs.size() && !covered; ++i)
      covered = pruned_sigs[i].contains(sig);
    if (!covered)
      return {false,
              "coverage: excluded trajectory whose stays no kept action "
              "contains: " +
                  to_string(q)};
  }

  // Count distinct maximal signatures directly from the full set.
  std::vector<StaySignature> distinct;
  for (const Trajectory& q : all) {
    StaySignature sig = stay_signature(q);
    if (!sig.empty()) distinct.push_back(std::move(sig));
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::size_t maximal = 0;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < distinct.size() && !dominated; ++j) {
      if (j == i) continue;
      if (distinct[j].stays.size() > distinct[i].stays.size() &&
          distinct[j].contains(distinct[i]))
        dominated = true;
    }
    if (!dominated) ++maximal;
  }
  if (pruned.actions.size() != maximal)
    return {false, "minimality: action set has " +
                       std::to_string(pruned.actions.size()) +
                       " members but there are " + std::to_string(maximal) +
                       " maximal stay signatures"};

  return {true, ""};
}

namespace {

Cell parse_cell_token(std::string_view token) {
  // "(x,y)"
  if (token.size() < 5 || token.front() != '(' || token.back() != ')')
    throw ParseError("malformed cell '" + std::string(token) + "'");
  token = token.substr(1, token.size() - 2);
  const std::size_t comma = token.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("malformed cell '(" + std::string(token) + ")'");
  try {
    Cell c{std::stoi(std::string(token.substr(0, comma))),
           std::stoi(std::string(token.substr(comma + 1)))};
    return c;
  } catch (const std::exception&) {
    throw ParseError("malformed cell '(" + std::string(token) + ")'");
  }
}

}  // namespace

void write_action_cache(std::ostream& os, const GridEnvironment& env,
                        Cell station, int cycle_length,
                        const ActionSet& actions) {
  os << "# cotask action-set cache\n";
  os << "env_hash " << env.layout_hash() << "\n";
  os << "station " << to_string(station) << "\n";
  os << "cycle_length " << cycle_length << "\n";
  os << "count " << actions.actions.size() << "\n";
  for (const Trajectory& traj : actions.actions) os << to_string(traj) << "\n";
}

ActionSet read_action_cache(std::istream& is, const GridEnvironment& env,
                            Cell station, int cycle_length) {
  std::string line;
  auto next_line = [&]() -> std::string& {
    if (!std::getline(is, line))
      throw ParseError("action cache: unexpected end of file");
    return line;
  };

  if (next_line() != "# cotask action-set cache")
    throw ParseError("action cache: missing header line");

  auto expect_field = [&](const std::string& key) -> std::string {
    next_line();
    if (line.rfind(key + " ", 0) != 0)
      throw ParseError("action cache: expected '" + key + "' line, got '" +
                       line + "'");
    return line.substr(key.size() + 1);
  };

  if (expect_field("env_hash") != std::to_string(env.layout_hash()))
    throw ParseError(
        "action cache: environment hash mismatch (cache built for a "
        "different map)");
  if (expect_field("station") != to_string(station))
    throw ParseError("action cache: station mismatch");
  if (expect_field("cycle_length") != std::to_string(cycle_length))
    throw ParseError("action cache: cycle length mismatch");
  std::size_t count = 0;
  try {
    count = std::stoull(expect_field("count"));
  } catch (const std::exception&) {
    throw ParseError("action cache: malformed count line");
  }

  ActionSet set;
  set.actions.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    next_line();
    Trajectory traj;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) traj.cells.push_back(parse_cell_token(token));
    if (traj.cells.size() != static_cast<std::size_t>(cycle_length) + 1)
      throw ParseError("action cache: trajectory with " +
                       std::to_string(traj.cells.size()) + " cells, expected " +
                       std::to_string(cycle_length + 1));
    set.actions.push_back(std::move(traj));
  }
  return set;
}

}  // namespace cotask
