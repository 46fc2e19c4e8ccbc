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

#ifndef COTASK_SCENARIO_IO_H_
#define COTASK_SCENARIO_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "cotask/harness.h"

namespace cotask {

// Scenario files are sectioned key = value text:
//
//   [environment]
//   map_file = ../maps/default.map     # or inline map_row lines
//   map_row = .......
//   map_row = .1.....
//
//   [game]
//   cycle_length = 6
//   robots = 3 2                       # 1-based station index per robot
//   pruning = on
//
//   [tasks]
//   # task = robots_required x y arrival departure value
//   task = 2 6 5 2 5 3
//
//   [learning]
//   epsilon = 0.007
//   m_exponent = 1.5
//   seed = 1
//   initial_action = uniform           # or an action index
//
// Lines whose first non-blank character is '#' are comments. Task values
// keep exact decimal semantics. Diagnostics carry file name and line.
Scenario parse_scenario(std::string_view text,
                        const std::filesystem::path& base_dir,
                        const std::string& display_name = "scenario");

Scenario load_scenario(const std::filesystem::path& path);

// Canonical form: map inlined, sections in fixed order. Reparsing yields an
// identical Scenario.
std::string serialize_scenario(const Scenario& scenario);

void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& path);

}  // namespace cotask

#endif  // COTASK_SCENARIO_IO_H_
