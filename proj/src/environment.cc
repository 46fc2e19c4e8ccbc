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

#include "cotask/environment.h"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "cotask/errors.h"

namespace cotask {

std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

GridEnvironment::GridEnvironment(int width, int height,
                                 const std::vector<Cell>& obstacles,
                                 std::vector<Cell> stations)
    : width_(width), height_(height), stations_(std::move(stations)) {
  if (width_ < 1 || height_ < 1)
    throw std::invalid_argument("grid dimensions must be positive");
  obstacle_.assign(static_cast<std::size_t>(width_) * height_, 0);
  for (Cell c : obstacles) {
    if (!in_bounds(c))
      throw std::invalid_argument("obstacle " + to_string(c) +
                                  " outside the grid");
    obstacle_[cell_index(c)] = 1;
  }
  if (stations_.empty())
    throw std::invalid_argument("environment needs at least one station");
  std::set<Cell> seen;
  for (Cell s : stations_) {
    if (!in_bounds(s))
      throw std::invalid_argument("station " + to_string(s) +
                                  " outside the grid");
    if (obstacle_[cell_index(s)])
      throw std::invalid_argument("station " + to_string(s) +
                                  " placed on an obstacle");
    if (!seen.insert(s).second)
      throw std::invalid_argument("duplicate station " + to_string(s));
  }
}

std::vector<Cell> GridEnvironment::neighbors(Cell c) const {
  if (!feasible(c))
    throw std::invalid_argument("neighborhood query on infeasible cell " +
                                to_string(c));
  std::vector<Cell> out;
  out.reserve(9);
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      Cell n{c.x + dx, c.y + dy};
      if (feasible(n)) out.push_back(n);
    }
  }
  return out;  // dx-major, dy-minor iteration is already (x, y)-sorted
}

std::vector<int> GridEnvironment::hop_distances(Cell from) const {
  if (!feasible(from))
    throw std::invalid_argument("distance query from infeasible cell " +
                                to_string(from));
  std::vector<int> dist(obstacle_.size(), -1);
  std::deque<Cell> frontier;
  dist[cell_index(from)] = 0;
  frontier.push_back(from);
  while (!frontier.empty()) {
    Cell c = frontier.front();
    frontier.pop_front();
    int d = dist[cell_index(c)];
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        Cell n{c.x + dx, c.y + dy};
        if (!feasible(n)) continue;
        int& dn = dist[cell_index(n)];
        if (dn < 0) {
          dn = d + 1;
          frontier.push_back(n);
        }
      }
    }
  }
  return dist;
}

std::string GridEnvironment::map_text() const {
  std::string text;
  text.reserve((width_ + 1) * height_);
  for (int y = height_; y >= 1; --y) {
    for (int x = 1; x <= width_; ++x) {
      Cell c{x, y};
      char ch = obstacle_[cell_index(c)] ? '#' : '.';
      for (std::size_t k = 0; k < stations_.size(); ++k) {
        if (stations_[k] == c) ch = static_cast<char>('1' + k);
      }
      text.push_back(ch);
    }
    text.push_back('\n');
  }
  return text;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t GridEnvironment::layout_hash() const {
  return fnv1a64(map_text());
}

GridEnvironment parse_environment(std::string_view map_text) {
  std::vector<std::string_view> lines;
  while (!map_text.empty()) {
    std::size_t nl = map_text.find('\n');
    std::string_view line =
        nl == std::string_view::npos ? map_text : map_text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    map_text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("map: no rows");

  const int height = static_cast<int>(lines.size());
  const int width = static_cast<int>(lines.front().size());
  if (width == 0) throw ParseError("map line 1: empty row");

  std::vector<Cell> obstacles;
  Cell station_at[10];
  bool station_seen[10] = {};

  for (int row = 0; row < height; ++row) {
    const std::string_view line = lines[row];
    if (static_cast<int>(line.size()) != width)
      throw ParseError("map line " + std::to_string(row + 1) + ": length " +
                       std::to_string(line.size()) +
                       " differs from line 1 (length " +
                       std::to_string(width) + ")");
    const int y = height - row;
    for (int col = 0; col < width; ++col) {
      const char ch = line[col];
      const Cell cell{col + 1, y};
      if (ch == '.') continue;
      if (ch == '#') {
        obstacles.push_back(cell);
      } else if (ch >= '1' && ch <= '9') {
        const int k = ch - '0';
        if (station_seen[k])
          throw ParseError("map line " + std::to_string(row + 1) +
                           ", column " + std::to_string(col + 1) +
                           ": duplicate station '" + ch + "'");
        station_seen[k] = true;
        station_at[k] = cell;
      } else {
        throw ParseError("map line " + std::to_string(row + 1) + ", column " +
                         std::to_string(col + 1) + ": invalid character '" +
                         std::string(1, ch) + "'");
      }
    }
  }

  int max_digit = 0;
  for (int k = 1; k <= 9; ++k)
    if (station_seen[k]) max_digit = k;
  if (max_digit == 0) throw ParseError("map defines no stations");
  std::vector<Cell> stations;
  for (int k = 1; k <= max_digit; ++k) {
    if (!station_seen[k])
      throw ParseError("map: station sequence has a gap; '" +
                       std::to_string(k) + "' is missing but '" +
                       std::to_string(max_digit) + "' is present");
    stations.push_back(station_at[k]);
  }

  return GridEnvironment(width, height, obstacles, std::move(stations));
}

}  // namespace cotask
