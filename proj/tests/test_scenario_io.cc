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

#include "cotask/scenario_io.h"

#include "doctest.h"

#include "cotask/errors.h"
#include "test_support.h"

using namespace cotask;

namespace {

const char* kInline = R"(# demo
[environment]
map_row = ....
map_row = .12.
map_row = #...

[game]
cycle_length = 3
robots = 1 2 1
pruning = off

[tasks]
task = 2 3 2 0 3 1.5
task = 1 2 3 1 3 0.5

[learning]
epsilon = 0.05
m_exponent = 2
seed = 9
initial_action = uniform
)";

}  // namespace

TEST_SUITE("scenario_io") {

TEST_CASE("inline scenario parses field by field") {
  const Scenario sc = parse_scenario(kInline, ".");
  CHECK(sc.environment.width() == 4);
  CHECK(sc.environment.height() == 3);
  CHECK_FALSE(sc.environment.feasible({1, 1}));  // '#' in the bottom row
  CHECK(sc.environment.stations() == std::vector<Cell>{{2, 2}, {3, 2}});
  CHECK(sc.cycle_length == 3);
  CHECK(sc.robot_stations == std::vector<int>{0, 1, 0});
  CHECK_FALSE(sc.pruning);
  REQUIRE(sc.tasks.size() == 2);
  CHECK(sc.tasks[0] == Task{2, {3, 2}, 0, 3, Value::parse("1.5")});
  CHECK(sc.tasks[1] == Task{1, {2, 3}, 1, 3, Value::parse("0.5")});
  CHECK(sc.learner.epsilon == 0.05);
  CHECK(sc.learner.m_exponent == 2.0);
  CHECK(sc.seed == 9);
  CHECK(sc.initial_action == std::nullopt);
}

TEST_CASE("map_file paths resolve relative to the scenario") {
  const Scenario sc = load_scenario(testing::test_data_path("mini.scenario"));
  CHECK(sc.environment.width() == 3);
  CHECK(sc.environment.stations() == std::vector<Cell>{{2, 2}});
  CHECK(sc.initial_action == 0);
  CHECK(sc.tasks[0].value == Value::parse("0.25"));
}

TEST_CASE("bundled scenarios load with their documented parameters") {
  const Scenario case1 = load_scenario(testing::scenario_path(
      "case1.scenario"));
  CHECK(case1.cycle_length == 6);
  CHECK(case1.robot_stations == std::vector<int>{2, 1});
  REQUIRE(case1.tasks.size() == 1);
  CHECK(case1.tasks[0] == Task{2, {6, 5}, 2, 5, Value::from_int(3)});
  CHECK(case1.learner.epsilon == 0.007);
  CHECK(case1.learner.m_exponent == 1.5);
  CHECK(case1.pruning);

  const Scenario case2 = load_scenario(testing::scenario_path(
      "case2.scenario"));
  CHECK(case2.cycle_length == 6);
  CHECK(case2.robot_stations == std::vector<int>{0, 0, 1, 1, 2, 2, 2});
  REQUIRE(case2.tasks.size() == 3);
  CHECK(case2.tasks[0] == Task{2, {6, 5}, 2, 5, Value::from_int(3)});
  CHECK(case2.tasks[1] == Task{2, {4, 1}, 1, 4, Value::from_int(2)});
  CHECK(case2.tasks[2] == Task{3, {3, 4}, 1, 5, Value::from_int(4)});
  CHECK(case2.learner.m_exponent == 1.8);
  CHECK(case2.max_total_value() == Value::from_int(9));

  // Both cases play in the same environment.
  CHECK(case1.environment == case2.environment);
}

TEST_CASE("load, serialize, reparse round-trips the scenario") {
  for (const char* name : {"case1.scenario", "case2.scenario",
                           "tiny.scenario"}) {
    const Scenario sc = load_scenario(testing::scenario_path(name));
    const std::string text = serialize_scenario(sc);
    const Scenario again = parse_scenario(text, ".");
    CHECK(again == sc);
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(serialize_scenario(again) == text);
  }
}

TEST_CASE("diagnostics carry file, line, and field") {
  auto expect_error = [](const std::string& text, const char* fragment) {
    CHECK_THROWS_WITH_AS(parse_scenario(text, ".", "bad.scenario"),
                         doctest::Contains(fragment), ParseError);
  };

  expect_error("[game]\nwhat = 1\n", "unknown key 'what'");
  expect_error("cycle_length = 1\n", "before any [section]");
  expect_error("[nowhere]\n", "unknown section");
  expect_error("[game]\ncycle_length\n", "expected 'key = value'");
  expect_error("[tasks]\ntask = 1 2 3\n", "task needs 6 fields");
  expect_error("[tasks]\ntask = 1 2 2 0 2 abc\n", "task value");
  expect_error("[game]\ncycle_length = six\n", "expected an integer");
  expect_error("[learning]\nepsilon = maybe\n", "expected a number");
  expect_error("[game]\npruning = sometimes\n", "expected on/off");

  // Line numbers point at the offending line.
  CHECK_THROWS_WITH_AS(
      parse_scenario("[game]\ncycle_length = 2\nbogus = 1\n", ".", "f"),
      doctest::Contains("f:3:"), ParseError);

  // Missing pieces are reported by section and key.
  expect_error(
      "[environment]\nmap_row = .1.\nmap_file = x.map\n[game]\n"
      "cycle_length = 2\nrobots = 1\n[learning]\nepsilon = 0.05\n"
      "m_exponent = 1\n",
      "either map_file or map_row");
  expect_error("[environment]\nmap_row = .1.\n[game]\ncycle_length = 2\n",
               "robots is required");
}

TEST_CASE("validation failures surface as parse errors with the field") {
  // Task window exceeds the cycle length.
  const std::string bad = R"([environment]
map_row = .1.

[game]
cycle_length = 2
robots = 1

[tasks]
task = 1 2 1 0 5 1

[learning]
epsilon = 0.05
m_exponent = 1
)";
  CHECK_THROWS_WITH_AS(parse_scenario(bad, ".", "w.scenario"),
                       doctest::Contains("time window"), ParseError);

  const std::string bad_eps = R"([environment]
map_row = .1.

[game]
cycle_length = 2
robots = 1

[learning]
epsilon = 1.5
m_exponent = 1
)";
  CHECK_THROWS_WITH_AS(parse_scenario(bad_eps, ".", "e.scenario"),
                       doctest::Contains("epsilon"), ParseError);
}

}  // TEST_SUITE
