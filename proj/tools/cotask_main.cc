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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cotask/commands.h"

int main(int argc, char** argv) {
  CLI::App app{
      "cotask: grid-world cooperative-task trajectory games with "
      "payoff-based log-linear learning"};
  app.require_subcommand(1);

  cotask::BuildOptions build_opts;
  std::string build_cache_dir;
  CLI::App* build = app.add_subcommand(
      "build", "enumerate and reduce per-robot action sets");
  build->add_option("scenario", build_opts.scenario_path, "scenario file")
      ->required();
  build->add_option("--cache-dir", build_cache_dir,
                    "write per-station action-set cache files here");

  cotask::RunOptions run_opts;
  std::uint64_t run_seed = 0;
  std::string run_target;
  CLI::App* run = app.add_subcommand(
      "run", "run seeded learning replicates; write trace CSVs + summary");
  run->add_option("scenario", run_opts.scenario_path, "scenario file")
      ->required();
  run->add_option("--cycles", run_opts.cycles, "cycles per replicate")
      ->required();
  run->add_option("--seed", run_seed, "base seed (replicate r uses seed+r)");
  run->add_option("--replicates", run_opts.replicates, "number of replicates");
  run->add_option("--out", run_opts.out_dir,
                  "output directory (default $COTASK_OUT_DIR or '.')");
  run->add_flag("--no-prune", run_opts.no_prune,
                "play over the full feasible sets");
  run->add_flag("--no-oracle", run_opts.no_oracle,
                "skip the brute-force optimum");
  run->add_option("--threads", run_opts.threads,
                  "concurrent replicates (default: hardware)");
  run->add_option("--window", run_opts.window,
                  "sustained-completion window (cycles)");
  run->add_option("--threshold", run_opts.threshold,
                  "sustained-completion fraction threshold");
  run->add_option("--tail-fraction", run_opts.tail_fraction,
                  "trailing fraction of cycles for occupancy metrics");
  run->add_option("--target-value", run_target,
                  "measure occupancy of this exact total value");

  cotask::VerifyOptions verify_opts;
  std::string verify_cache_dir;
  CLI::App* verify = app.add_subcommand(
      "verify", "check action-set constraints, optimum preservation, and "
                "the deviation identity");
  verify->add_option("scenario", verify_opts.scenario_path, "scenario file")
      ->required();
  verify->add_option("--trials", verify_opts.trials,
                     "random deviation trials");
  verify->add_option("--eval-limit", verify_opts.eval_limit,
                     "max joint profiles for the brute-force check");
  verify->add_option("--cache-dir", verify_cache_dir,
                     "verify cached action sets instead of recomputing");
  verify->add_option("--seed", verify_opts.seed, "seed for random trials");

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) {
    if (!build_cache_dir.empty()) build_opts.cache_dir = build_cache_dir;
    return cotask::cmd_build(build_opts, std::cout, std::cerr);
  }
  if (run->parsed()) {
    if (run->count("--seed")) run_opts.seed = run_seed;
    if (!run_target.empty()) run_opts.target_value = run_target;
    return cotask::cmd_run(run_opts, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    if (!verify_cache_dir.empty()) verify_opts.cache_dir = verify_cache_dir;
    return cotask::cmd_verify(verify_opts, std::cout, std::cerr);
  }
  return cotask::kExitError;
}
