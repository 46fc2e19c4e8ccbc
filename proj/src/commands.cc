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

#include "cotask/commands.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <vector>

#include "json.hpp"

#include "cotask/errors.h"
#include "cotask/harness.h"
#include "cotask/rng.h"
#include "cotask/scenario_io.h"

namespace cotask {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

std::string cache_file_name(int station_number, int cycle_length) {
  return "action_cache_s" + std::to_string(station_number) + "_T" +
         std::to_string(cycle_length) + ".txt";
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("COTASK_OUT_DIR"); env && *env)
    return env;
  return ".";
}

}  // namespace

int cmd_build(const BuildOptions& options, std::ostream& out,
              std::ostream& err) {
  return guard(err, [&] {
    const Scenario scenario = load_scenario(options.scenario_path);
    const Game game = build_game(scenario);

    for (int i = 0; i < scenario.robot_count(); ++i) {
      const int st = scenario.robot_stations[i];
      out << "robot " << i + 1 << ": station s" << st + 1 << " "
          << to_string(scenario.environment.stations()[st])
          << ", feasible trajectories " << game.feasible_counts[i]
          << ", actions " << game.robot_actions[i]->size() << "\n";
    }

    if (options.cache_dir) {
      fs::create_directories(*options.cache_dir);
      for (const auto& [st, set] : game.by_station) {
        const fs::path path =
            fs::path(*options.cache_dir) /
            cache_file_name(st + 1, scenario.cycle_length);
        std::ofstream f(path);
        if (!f) throw Error("cannot write cache file '" + path.string() + "'");
        write_action_cache(f, scenario.environment,
                           scenario.environment.stations()[st],
                           scenario.cycle_length, *set);
        out << "wrote " << path.string() << "\n";
      }
    }
    return kExitOk;
  });
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  return guard(err, [&] {
    Scenario scenario = load_scenario(options.scenario_path);
    if (options.no_prune) scenario.pruning = false;
    const std::uint64_t base_seed =
        options.seed ? *options.seed : scenario.seed;
    if (options.cycles < 1) throw Error("--cycles must be >= 1");
    if (options.replicates < 1) throw Error("--replicates must be >= 1");

    const Game game = build_game(scenario);

    // Occupancy is measured against the brute-force optimum unless a target
    // is given explicitly. Oversized joint spaces skip the oracle.
    std::optional<Value> target;
    std::optional<Value> oracle_optimum;
    std::string oracle_note;
    if (options.target_value) {
      target = Value::parse(*options.target_value);
    }
    if (!options.no_oracle) {
      try {
        oracle_optimum = brute_force_optimum(scenario, /*use_pruned=*/true)
                             .best;
        if (!target) target = oracle_optimum;
      } catch (const LimitError& e) {
        oracle_note = e.what();
      }
    }

    const fs::path out_dir = resolve_out_dir(options.out_dir);
    fs::create_directories(out_dir);

    BatchOptions batch;
    batch.cycles = options.cycles;
    batch.base_seed = base_seed;
    batch.replicates = options.replicates;
    batch.detail = TraceDetail::kFull;
    batch.threads = options.threads;
    batch.target = target;
    batch.tail_cycles = static_cast<std::size_t>(
        options.tail_fraction * static_cast<double>(options.cycles));
    batch.window = options.window;
    batch.threshold = options.threshold;

    std::vector<std::string> trace_files(options.replicates);
    auto sink = [&](int replicate, const RunTrace& trace) {
      const fs::path path =
          out_dir / ("trace_" + std::to_string(trace.seed) + ".csv");
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error("cannot write trace file '" + path.string() + "'");
      write_trace_csv(trace, f);
      trace_files[replicate] = path.string();
    };

    const std::vector<ReplicateMetrics> metrics =
        run_replicates(scenario, game, batch, sink);

    json summary;
    summary["scenario"] = options.scenario_path;
    summary["cycles"] = options.cycles;
    summary["base_seed"] = base_seed;
    summary["replicates"] = options.replicates;
    summary["pruning"] = scenario.pruning;
    summary["tail_cycles"] = batch.tail_cycles;
    summary["window"] = batch.window;
    summary["threshold"] = batch.threshold;
    summary["max_total_value"] = scenario.max_total_value().str();
    summary["oracle_optimum"] =
        oracle_optimum ? json(oracle_optimum->str()) : json();
    if (!oracle_note.empty()) summary["oracle_skipped"] = oracle_note;
    summary["target_value"] = target ? json(target->str()) : json();
    {
      json sizes = json::array();
      json feasible = json::array();
      for (int i = 0; i < scenario.robot_count(); ++i) {
        sizes.push_back(game.robot_actions[i]->size());
        feasible.push_back(game.feasible_counts[i]);
      }
      summary["action_set_sizes"] = sizes;
      summary["feasible_set_sizes"] = feasible;
    }

    json per_replicate = json::array();
    std::vector<double> averages;
    std::vector<double> fractions;
    std::vector<double> sustained_censored;
    int unconverged = 0;
    for (const ReplicateMetrics& m : metrics) {
      json r;
      r["seed"] = m.seed;
      r["trace_file"] = trace_files[&m - metrics.data()];
      r["final_long_run_average"] = m.final_average;
      r["fraction_at_target"] =
          m.fraction_at_target ? json(*m.fraction_at_target) : json();
      r["first_sustained_completion"] =
          m.first_sustained ? json(*m.first_sustained) : json();
      per_replicate.push_back(r);

      averages.push_back(m.final_average);
      if (m.fraction_at_target) fractions.push_back(*m.fraction_at_target);
      if (target) {
        if (m.first_sustained) {
          sustained_censored.push_back(
              static_cast<double>(*m.first_sustained));
        } else {
          sustained_censored.push_back(static_cast<double>(options.cycles));
          ++unconverged;
        }
      }
    }
    summary["replicate_metrics"] = per_replicate;

    json aggregate;
    aggregate["median_final_long_run_average"] = median(averages);
    if (!fractions.empty())
      aggregate["median_fraction_at_target"] = median(fractions);
    if (!sustained_censored.empty()) {
      aggregate["median_first_sustained_completion_censored"] =
          median(sustained_censored);
      aggregate["unconverged_replicates"] = unconverged;
    }
    summary["aggregate"] = aggregate;

    const fs::path summary_path = out_dir / "summary.json";
    std::ofstream f(summary_path, std::ios::binary);
    if (!f)
      throw Error("cannot write summary file '" + summary_path.string() + "'");
    f << summary.dump(2) << "\n";

    out << "wrote " << options.replicates << " trace file(s) and "
        << summary_path.string() << "\n";
    out << "median final long-run average: "
        << aggregate["median_final_long_run_average"].dump() << "\n";
    if (!fractions.empty())
      out << "median fraction at target "
          << (target ? target->str() : std::string("?")) << ": "
          << aggregate["median_fraction_at_target"].dump() << "\n";
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  return guard(err, [&] {
    const Scenario scenario = load_scenario(options.scenario_path);
    bool failed = false;

    // Full feasible sets per distinct station.
    std::map<int, std::vector<Trajectory>> full_by_station;
    for (int st : scenario.robot_stations) {
      if (full_by_station.count(st)) continue;
      full_by_station[st] = enumerate_feasible(
          scenario.environment, scenario.environment.stations()[st],
          scenario.cycle_length);
    }

    // Reduced sets: recomputed, or read back from a cache under test.
    std::map<int, ActionSet> pruned_by_station;
    for (const auto& [st, full] : full_by_station) {
      if (options.cache_dir) {
        const fs::path path =
            fs::path(*options.cache_dir) /
            cache_file_name(st + 1, scenario.cycle_length);
        std::ifstream f(path);
        if (!f)
          throw ParseError("cannot open cache file '" + path.string() + "'");
        pruned_by_station[st] = read_action_cache(
            f, scenario.environment, scenario.environment.stations()[st],
            scenario.cycle_length);
      } else {
        pruned_by_station[st] = prune_action_set(full);
      }
    }

    for (int i = 0; i < scenario.robot_count(); ++i) {
      const int st = scenario.robot_stations[i];
      const VerifyResult result =
          verify_action_set(full_by_station[st], pruned_by_station[st]);
      if (result.ok) {
        out << "[PASS] robot " << i + 1 << " action-set constraints"
            << " (feasible " << full_by_station[st].size() << ", actions "
            << pruned_by_station[st].size() << ")\n";
      } else {
        failed = true;
        out << "[FAIL] robot " << i + 1 << " action-set constraints: "
            << result.diagnostic << "\n";
      }
    }

    // Optimum preservation, on both joint spaces when they fit the limit.
    {
      std::vector<const std::vector<Trajectory>*> full_sets;
      std::vector<const std::vector<Trajectory>*> pruned_sets;
      for (int st : scenario.robot_stations) {
        full_sets.push_back(&full_by_station[st]);
        pruned_sets.push_back(&pruned_by_station[st].actions);
      }
      try {
        const Optimum full = brute_force_over(
            full_sets, scenario.tasks, scenario.cycle_length,
            options.eval_limit);
        const Optimum pruned = brute_force_over(
            pruned_sets, scenario.tasks, scenario.cycle_length,
            options.eval_limit);
        if (full.best == pruned.best) {
          out << "[PASS] optimum preserved by reduction (optimum "
              << full.best.str() << ", " << full.evaluations << " + "
              << pruned.evaluations << " profiles)\n";
        } else {
          failed = true;
          out << "[FAIL] optimum preserved by reduction: full "
              << full.best.str() << " != reduced " << pruned.best.str()
              << "\n";
        }
      } catch (const LimitError& e) {
        out << "[SKIP] optimum preserved by reduction: " << e.what() << "\n";
      }
    }

    // Exact potential-property identity on random unilateral deviations.
    {
      RngStream rng(options.seed);
      const int n = scenario.robot_count();
      std::vector<const std::vector<Trajectory>*> sets;
      for (int st : scenario.robot_stations)
        sets.push_back(&full_by_station[st]);

      int bad = -1;
      for (int trial = 0; trial < options.trials; ++trial) {
        ActionProfile profile;
        profile.trajectories.reserve(n);
        for (int i = 0; i < n; ++i)
          profile.trajectories.push_back(
              (*sets[i])[rng.uniform_below(sets[i]->size())]);
        const int robot = static_cast<int>(rng.uniform_below(n));
        ActionProfile deviated = profile;
        deviated.trajectories[robot] =
            (*sets[robot])[rng.uniform_below(sets[robot]->size())];

        const Value du =
            wonderful_life_utility(deviated, scenario.tasks, robot) -
            wonderful_life_utility(profile, scenario.tasks, robot);
        const Value df = total_value(deviated, scenario.tasks) -
                         total_value(profile, scenario.tasks);
        if (du != df) {
          bad = trial;
          break;
        }
      }
      if (bad < 0) {
        out << "[PASS] utility/objective deviation identity: "
            << options.trials << "/" << options.trials << " exact\n";
      } else {
        failed = true;
        out << "[FAIL] utility/objective deviation identity at trial " << bad
            << "\n";
      }
    }

    if (failed) {
      out << "verification FAILED\n";
      return kExitVerifyFailed;
    }
    out << "all checks passed\n";
    return kExitOk;
  });
}

}  // namespace cotask
