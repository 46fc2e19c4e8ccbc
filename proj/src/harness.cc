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

#include "cotask/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cotask/errors.h"
#include "cotask/rng.h"

namespace cotask {

Value Scenario::max_total_value() const {
  Value total;
  for (const Task& task : tasks) total += task.value;
  return total;
}

void Scenario::validate() const {
  if (cycle_length < 1)
    throw std::invalid_argument("cycle_length must be at least 1");
  if (robot_stations.empty())
    throw std::invalid_argument("at least one robot is required");
  const int m = static_cast<int>(environment.stations().size());
  for (std::size_t i = 0; i < robot_stations.size(); ++i) {
    const int st = robot_stations[i];
    if (st < 0 || st >= m)
      throw std::invalid_argument(
          "robot " + std::to_string(i + 1) + ": station index " +
          std::to_string(st + 1) + " outside 1.." + std::to_string(m));
  }
  for (std::size_t j = 0; j < tasks.size(); ++j) {
    const Task& task = tasks[j];
    const std::string label = "task " + std::to_string(j + 1) + ": ";
    if (task.required_count < 1)
      throw std::invalid_argument(label + "required robot count must be >= 1");
    if (!environment.feasible(task.location))
      throw std::invalid_argument(label + "location " +
                                  to_string(task.location) +
                                  " is not a feasible cell");
    if (task.arrival < 0 || task.arrival >= task.departure ||
        task.departure > cycle_length)
      throw std::invalid_argument(
          label + "time window [" + std::to_string(task.arrival) + ", " +
          std::to_string(task.departure) +
          "] must satisfy 0 <= arrival < departure <= cycle_length");
    if (!(task.value > Value{}))
      throw std::invalid_argument(label + "value must be positive");
  }
  if (!(learner.epsilon > 0.0 && learner.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(learner.m_exponent > 0.0))
    throw std::invalid_argument("m_exponent must be positive");
  if (initial_action && *initial_action < 0)
    throw std::invalid_argument("initial_action must be non-negative");
}

namespace {

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (v + 0x9E3779B97F4A7C15ULL));
}

}  // namespace

std::uint64_t scenario_fingerprint(const Scenario& sc) {
  std::uint64_t h = sc.environment.layout_hash();
  h = hash_combine(h, static_cast<std::uint64_t>(sc.cycle_length));
  for (int st : sc.robot_stations)
    h = hash_combine(h, static_cast<std::uint64_t>(st));
  for (const Task& t : sc.tasks) {
    h = hash_combine(h, static_cast<std::uint64_t>(t.required_count));
    h = hash_combine(h, static_cast<std::uint64_t>(t.location.x));
    h = hash_combine(h, static_cast<std::uint64_t>(t.location.y));
    h = hash_combine(h, static_cast<std::uint64_t>(t.arrival));
    h = hash_combine(h, static_cast<std::uint64_t>(t.departure));
    h = hash_combine(h, static_cast<std::uint64_t>(t.value.micros()));
  }
  std::uint64_t eps_bits, m_bits;
  static_assert(sizeof(double) == sizeof(std::uint64_t));
  std::memcpy(&eps_bits, &sc.learner.epsilon, sizeof eps_bits);
  std::memcpy(&m_bits, &sc.learner.m_exponent, sizeof m_bits);
  h = hash_combine(h, eps_bits);
  h = hash_combine(h, m_bits);
  h = hash_combine(h, sc.initial_action ? *sc.initial_action + 1 : 0);
  h = hash_combine(h, sc.pruning ? 1 : 0);
  return h;
}

Game build_game(const Scenario& scenario, std::size_t enumeration_limit) {
  scenario.validate();
  Game game;
  const int n = scenario.robot_count();
  game.robot_actions.resize(n);
  game.feasible_counts.resize(n);
  std::map<int, std::size_t> feasible_by_station;

  for (int st : scenario.robot_stations) {
    if (game.by_station.count(st)) continue;
    const Cell station = scenario.environment.stations()[st];
    std::vector<Trajectory> all = enumerate_feasible(
        scenario.environment, station, scenario.cycle_length,
        enumeration_limit);
    feasible_by_station[st] = all.size();
    ActionSet set =
        scenario.pruning ? prune_action_set(all) : ActionSet{std::move(all)};
    game.by_station[st] = std::make_shared<const ActionSet>(std::move(set));
  }
  for (int i = 0; i < n; ++i) {
    const int st = scenario.robot_stations[i];
    game.robot_actions[i] = game.by_station.at(st);
    game.feasible_counts[i] = feasible_by_station.at(st);
  }
  return game;
}

RunTrace run(const Scenario& scenario, const Game& game, std::size_t cycles,
             std::uint64_t seed, TraceDetail detail) {
  scenario.validate();
  if (cycles < 1) throw std::invalid_argument("cycle count must be >= 1");
  const int n = scenario.robot_count();
  if (static_cast<int>(game.robot_actions.size()) != n)
    throw std::invalid_argument("game was built for a different robot count");

  std::vector<RngStream> rngs;
  rngs.reserve(n);
  std::vector<LearnerState> learners;
  learners.reserve(n);
  std::vector<int> action_counts(n);
  for (int i = 0; i < n; ++i) {
    action_counts[i] = static_cast<int>(game.robot_actions[i]->size());
    rngs.push_back(RngStream::substream(seed, static_cast<std::uint64_t>(i)));
    if (scenario.initial_action &&
        *scenario.initial_action >= action_counts[i])
      throw std::invalid_argument(
          "initial_action " + std::to_string(*scenario.initial_action) +
          " outside robot " + std::to_string(i + 1) + "'s action set of size " +
          std::to_string(action_counts[i]));
    learners.push_back(
        init_learner(action_counts[i], scenario.initial_action, rngs.back()));
  }

  RunTrace trace;
  trace.robot_count = n;
  trace.seed = seed;
  trace.scenario_hash = scenario_fingerprint(scenario);
  trace.f.reserve(cycles);
  const bool full = detail == TraceDetail::kFull;
  if (full) {
    trace.utilities.reserve(cycles * n);
    trace.actions.reserve(cycles * n);
    trace.experimented.reserve(cycles * n);
  }

  std::vector<const Trajectory*> profile(n);
  ScoreScratch scratch;
  ScoreReport report;

  for (std::size_t cycle = 0; cycle < cycles; ++cycle) {
    for (int i = 0; i < n; ++i)
      profile[i] =
          &game.robot_actions[i]->actions[learners[i].current_action];
    score_profile(profile, scenario.tasks, scratch, report);

    trace.f.push_back(report.total);
    if (full) {
      for (int i = 0; i < n; ++i) {
        trace.utilities.push_back(report.utilities[i]);
        trace.actions.push_back(
            static_cast<std::uint32_t>(learners[i].current_action));
        trace.experimented.push_back(learners[i].experimenting ? 1 : 0);
      }
    }

    for (int i = 0; i < n; ++i) {
      learners[i].current_utility = report.utilities[i];
      pbll_step(learners[i], scenario.learner, rngs[i], action_counts[i]);
    }
  }
  return trace;
}

RunTrace run(const Scenario& scenario, std::size_t cycles) {
  return run(scenario, build_game(scenario), cycles, scenario.seed);
}

std::vector<double> long_run_average(const RunTrace& trace) {
  if (trace.f.empty())
    throw std::invalid_argument("long_run_average of an empty trace");
  std::vector<double> series;
  series.reserve(trace.f.size());
  std::int64_t sum_micros = 0;
  for (std::size_t t = 0; t < trace.f.size(); ++t) {
    sum_micros += trace.f[t].micros();
    series.push_back(static_cast<double>(sum_micros) / Value::kScale /
                     static_cast<double>(t + 1));
  }
  return series;
}

double final_long_run_average(const RunTrace& trace) {
  if (trace.f.empty())
    throw std::invalid_argument("long_run_average of an empty trace");
  std::int64_t sum_micros = 0;
  for (Value v : trace.f) sum_micros += v.micros();
  return static_cast<double>(sum_micros) / Value::kScale /
         static_cast<double>(trace.f.size());
}

double fraction_at_value(const RunTrace& trace, Value value,
                         std::size_t from_cycle) {
  if (from_cycle >= trace.f.size())
    throw std::invalid_argument("from_cycle beyond the end of the trace");
  std::size_t hits = 0;
  for (std::size_t t = from_cycle; t < trace.f.size(); ++t)
    if (trace.f[t] == value) ++hits;
  return static_cast<double>(hits) /
         static_cast<double>(trace.f.size() - from_cycle);
}

std::optional<std::size_t> first_sustained_completion(const RunTrace& trace,
                                                      Value value,
                                                      std::size_t window,
                                                      double threshold) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1]");
  const std::size_t cycles = trace.f.size();
  if (window > cycles) return std::nullopt;

  // Sliding hit count; >= ceil(threshold * window) hits qualify.
  const auto needed = static_cast<std::size_t>(
      std::ceil(threshold * static_cast<double>(window) -
                1e-9));  // guard against 0.95 * 10000 rounding up
  std::size_t hits = 0;
  for (std::size_t t = 0; t < window; ++t)
    if (trace.f[t] == value) ++hits;
  if (hits >= needed) return 0;
  for (std::size_t t = 1; t + window <= cycles; ++t) {
    if (trace.f[t - 1] == value) --hits;
    if (trace.f[t + window - 1] == value) ++hits;
    if (hits >= needed) return t;
  }
  return std::nullopt;
}

Optimum brute_force_over(
    const std::vector<const std::vector<Trajectory>*>& sets,
    std::span<const Task> tasks, int cycle_length, std::size_t eval_limit) {
  const int n = static_cast<int>(sets.size());
  if (n == 0) throw std::invalid_argument("brute force needs >= 1 robot");
  const int k = static_cast<int>(tasks.size());
  const int T = cycle_length;

  std::size_t product = 1;
  for (const auto* set : sets) {
    if (set->empty())
      throw std::invalid_argument("brute force over an empty action set");
    if (product > eval_limit / set->size())  // overflow-safe size check
      throw LimitError("joint action space exceeds the evaluation limit of " +
                       std::to_string(eval_limit) + " profiles");
    product *= set->size();
  }

  Optimum result;
  result.profile.assign(n, 0);
  if (k == 0) return result;

  // Per (robot, action, task, t): 1 if the trajectory holds the task cell
  // over [t, t+1]. Flat tables keep the product scan branch-light.
  std::vector<std::vector<std::uint8_t>> stays(n);
  for (int i = 0; i < n; ++i) {
    const auto& actions = *sets[i];
    stays[i].assign(actions.size() * k * T, 0);
    for (std::size_t a = 0; a < actions.size(); ++a)
      for (int j = 0; j < k; ++j)
        for (int t = tasks[j].arrival; t < tasks[j].departure; ++t)
          stays[i][(a * k + j) * T + t] =
              actions[a].stays_at(t, tasks[j].location) ? 1 : 0;
  }

  std::vector<std::size_t> idx(n, 0);
  Value best = Value::from_micros(-1);
  for (;;) {
    Value f;
    for (int j = 0; j < k; ++j) {
      const Task& task = tasks[j];
      bool done = false;
      for (int t = task.arrival; t < task.departure && !done; ++t) {
        int count = 0;
        for (int i = 0; i < n; ++i)
          count += stays[i][(idx[i] * k + j) * T + t];
        done = count >= task.required_count;
      }
      if (done) f += task.value;
    }
    ++result.evaluations;
    if (f > best) {  // strict: the first (lex-smallest) maximizer wins
      best = f;
      result.profile = idx;
    }

    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == sets[pos]->size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  result.best = best;
  return result;
}

Optimum brute_force_optimum(const Scenario& scenario, bool use_pruned,
                            std::size_t eval_limit) {
  scenario.validate();
  std::map<int, std::vector<Trajectory>> by_station;
  for (int st : scenario.robot_stations) {
    if (by_station.count(st)) continue;
    std::vector<Trajectory> all =
        enumerate_feasible(scenario.environment,
                           scenario.environment.stations()[st],
                           scenario.cycle_length);
    by_station[st] =
        use_pruned ? std::move(prune_action_set(all).actions) : std::move(all);
  }
  std::vector<const std::vector<Trajectory>*> sets;
  sets.reserve(scenario.robot_stations.size());
  for (int st : scenario.robot_stations) sets.push_back(&by_station.at(st));
  return brute_force_over(sets, scenario.tasks, scenario.cycle_length,
                          eval_limit);
}

std::vector<ReplicateMetrics> run_replicates(
    const Scenario& scenario, const Game& game, const BatchOptions& options,
    const std::function<void(int, const RunTrace&)>& sink) {
  if (options.replicates < 1)
    throw std::invalid_argument("replicates must be >= 1");
  if (options.cycles < 1)
    throw std::invalid_argument("cycle count must be >= 1");

  const std::size_t tail = options.tail_cycles > 0
                               ? std::min(options.tail_cycles, options.cycles)
                               : std::max<std::size_t>(1, options.cycles / 5);

  std::vector<ReplicateMetrics> metrics(options.replicates);
  std::atomic<int> next{0};
  std::mutex sink_mutex;

  auto worker = [&]() {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= options.replicates) return;
      const std::uint64_t seed =
          options.base_seed + static_cast<std::uint64_t>(r);
      RunTrace trace = run(scenario, game, options.cycles, seed,
                           options.detail);
      ReplicateMetrics m;
      m.seed = seed;
      m.final_average = final_long_run_average(trace);
      if (options.target) {
        m.fraction_at_target =
            fraction_at_value(trace, *options.target, trace.cycles() - tail);
        m.first_sustained = first_sustained_completion(
            trace, *options.target, options.window, options.threshold);
      }
      metrics[r] = m;
      if (sink) {
        std::lock_guard<std::mutex> lock(sink_mutex);
        sink(r, trace);
      }
    }
  };

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, options.replicates);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return metrics;
}

void write_trace_csv(const RunTrace& trace, std::ostream& os) {
  const bool full = trace.full_detail() && trace.robot_count > 0 &&
                    !trace.utilities.empty();
  os << "cycle,f";
  if (full) {
    for (int i = 1; i <= trace.robot_count; ++i)
      os << ",utility_" << i << ",action_" << i << ",experimenting_" << i;
  }
  os << "\n";
  const int n = trace.robot_count;
  for (std::size_t t = 0; t < trace.f.size(); ++t) {
    os << t << ',' << trace.f[t].str();
    if (full) {
      for (int i = 0; i < n; ++i) {
        const std::size_t at = t * n + i;
        os << ',' << trace.utilities[at].str() << ',' << trace.actions[at]
           << ',' << static_cast<int>(trace.experimented[at]);
      }
    }
    os << '\n';
  }
}

}  // namespace cotask
