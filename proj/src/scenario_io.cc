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

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "cotask/errors.h"

namespace cotask {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Diag {
  const std::string& name;
  int line = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(name + ":" + std::to_string(line) + ": " + msg);
  }
};

long long parse_int(std::string_view text, const Diag& at,
                    const std::string& field) {
  text = trim(text);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    at.fail(field + ": expected an integer, got '" + std::string(text) + "'");
  return v;
}

double parse_real(std::string_view text, const Diag& at,
                  const std::string& field) {
  text = trim(text);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    at.fail(field + ": expected a number, got '" + std::string(text) + "'");
  return v;
}

bool parse_bool(std::string_view text, const Diag& at,
                const std::string& field) {
  text = trim(text);
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  at.fail(field + ": expected on/off, got '" + std::string(text) + "'");
}

void to_chars_double(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

Scenario parse_scenario(std::string_view text,
                        const std::filesystem::path& base_dir,
                        const std::string& display_name) {
  std::optional<std::string> map_file;
  std::vector<std::string> map_rows;
  std::optional<int> cycle_length;
  std::optional<std::vector<int>> robots;
  bool pruning = true;
  std::vector<Task> tasks;
  std::optional<double> epsilon;
  std::optional<double> m_exponent;
  std::uint64_t seed = 0;
  std::optional<int> initial_action;
  bool initial_uniform = true;

  Diag at{display_name};
  std::string section;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++at.line;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') at.fail("unterminated section header");
      section = std::string(line.substr(1, line.size() - 2));
      if (section != "environment" && section != "game" &&
          section != "tasks" && section != "learning")
        at.fail("unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      at.fail("expected 'key = value', got '" + std::string(line) + "'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));

    if (section.empty())
      at.fail("key '" + key + "' before any [section]");

    if (section == "environment") {
      if (key == "map_file") {
        if (map_file) at.fail("duplicate map_file");
        map_file = std::string(value);
      } else if (key == "map_row") {
        // Map rows are taken verbatim (they may contain '#').
        map_rows.push_back(std::string(trim(line.substr(eq + 1))));
      } else {
        at.fail("unknown key '" + key + "' in [environment]");
      }
    } else if (section == "game") {
      if (key == "cycle_length") {
        if (cycle_length) at.fail("duplicate cycle_length");
        cycle_length = static_cast<int>(parse_int(value, at, key));
      } else if (key == "robots") {
        if (robots) at.fail("duplicate robots");
        std::vector<int> stations;
        for (const std::string& tok : split_ws(value))
          stations.push_back(static_cast<int>(parse_int(tok, at, key)) - 1);
        robots = std::move(stations);
      } else if (key == "pruning") {
        pruning = parse_bool(value, at, key);
      } else {
        at.fail("unknown key '" + key + "' in [game]");
      }
    } else if (section == "tasks") {
      if (key != "task") at.fail("unknown key '" + key + "' in [tasks]");
      const std::vector<std::string> fields = split_ws(value);
      if (fields.size() != 6)
        at.fail(
            "task needs 6 fields (robots_required x y arrival departure "
            "value), got " +
            std::to_string(fields.size()));
      Task task;
      task.required_count =
          static_cast<int>(parse_int(fields[0], at, "task robots_required"));
      task.location.x = static_cast<int>(parse_int(fields[1], at, "task x"));
      task.location.y = static_cast<int>(parse_int(fields[2], at, "task y"));
      task.arrival = static_cast<int>(parse_int(fields[3], at, "task arrival"));
      task.departure =
          static_cast<int>(parse_int(fields[4], at, "task departure"));
      try {
        task.value = Value::parse(fields[5]);
      } catch (const ParseError& e) {
        at.fail(std::string("task value: ") + e.what());
      }
      tasks.push_back(task);
    } else if (section == "learning") {
      if (key == "epsilon") {
        epsilon = parse_real(value, at, key);
      } else if (key == "m_exponent") {
        m_exponent = parse_real(value, at, key);
      } else if (key == "seed") {
        seed = static_cast<std::uint64_t>(parse_int(value, at, key));
      } else if (key == "initial_action") {
        if (value == "uniform") {
          initial_uniform = true;
        } else {
          initial_uniform = false;
          initial_action = static_cast<int>(parse_int(value, at, key));
        }
      } else {
        at.fail("unknown key '" + key + "' in [learning]");
      }
    }
  }

  at.line = 0;  // whole-file diagnostics from here on

  if (map_file && !map_rows.empty())
    throw ParseError(display_name +
                     ": give either map_file or map_row lines, not both");
  std::string map_text;
  std::string map_name = display_name;
  if (map_file) {
    const std::filesystem::path path = base_dir / *map_file;
    std::ifstream f(path);
    if (!f)
      throw ParseError(display_name + ": cannot open map file '" +
                       path.string() + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    map_text = buf.str();
    map_name = path.string();
  } else if (!map_rows.empty()) {
    for (const std::string& row : map_rows) {
      map_text += row;
      map_text += '\n';
    }
  } else {
    throw ParseError(display_name +
                     ": [environment] needs map_file or map_row lines");
  }

  if (!cycle_length)
    throw ParseError(display_name + ": [game] cycle_length is required");
  if (!robots || robots->empty())
    throw ParseError(display_name + ": [game] robots is required");
  if (!epsilon)
    throw ParseError(display_name + ": [learning] epsilon is required");
  if (!m_exponent)
    throw ParseError(display_name + ": [learning] m_exponent is required");

  GridEnvironment env = [&] {
    try {
      return parse_environment(map_text);
    } catch (const ParseError& e) {
      throw ParseError(map_name + ": " + e.what());
    }
  }();

  Scenario scenario{std::move(env),
                    *cycle_length,
                    std::move(*robots),
                    std::move(tasks),
                    LearnerParams{*epsilon, *m_exponent},
                    initial_uniform ? std::nullopt : initial_action,
                    pruning,
                    seed};
  try {
    scenario.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(display_name + ": " + e.what());
  }
  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f)
    throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_scenario(buf.str(), path.parent_path(), path.string());
}

std::string serialize_scenario(const Scenario& scenario) {
  std::string out;
  out += "[environment]\n";
  std::istringstream rows(scenario.environment.map_text());
  std::string row;
  while (std::getline(rows, row)) out += "map_row = " + row + "\n";

  out += "\n[game]\n";
  out += "cycle_length = " + std::to_string(scenario.cycle_length) + "\n";
  out += "robots =";
  for (int st : scenario.robot_stations) out += " " + std::to_string(st + 1);
  out += "\n";
  out += std::string("pruning = ") + (scenario.pruning ? "on" : "off") + "\n";

  out += "\n[tasks]\n";
  for (const Task& t : scenario.tasks) {
    out += "task = " + std::to_string(t.required_count) + " " +
           std::to_string(t.location.x) + " " + std::to_string(t.location.y) +
           " " + std::to_string(t.arrival) + " " +
           std::to_string(t.departure) + " " + t.value.str() + "\n";
  }

  out += "\n[learning]\n";
  out += "epsilon = ";
  to_chars_double(out, scenario.learner.epsilon);
  out += "\nm_exponent = ";
  to_chars_double(out, scenario.learner.m_exponent);
  out += "\nseed = " + std::to_string(scenario.seed) + "\n";
  out += "initial_action = ";
  out += scenario.initial_action ? std::to_string(*scenario.initial_action)
                                 : "uniform";
  out += "\n";
  return out;
}

void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f)
    throw Error("cannot write scenario file '" + path.string() + "'");
  f << serialize_scenario(scenario);
}

}  // namespace cotask
