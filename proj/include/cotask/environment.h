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

#ifndef COTASK_ENVIRONMENT_H_
#define COTASK_ENVIRONMENT_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cotask {

// 1-based grid coordinate: x is the column, y is the row. (1,1) is the
// bottom-left cell; map files list the top row first so they read like a
// picture of the environment.
struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(Cell, Cell) = default;
};

std::string to_string(Cell c);

// Immutable discretized 2D world: rectangular grid, obstacle cells, and an
// ordered list of stations. Robots move under an 8-connected motion model
// where holding the current cell is always allowed, so a cell is adjacent
// to itself.
class GridEnvironment {
 public:
  // Validates bounds, duplicate-free feasible stations, at least one
  // station; throws std::invalid_argument otherwise.
  GridEnvironment(int width, int height, const std::vector<Cell>& obstacles,
                  std::vector<Cell> stations);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<Cell>& stations() const { return stations_; }

  bool in_bounds(Cell c) const {
    return c.x >= 1 && c.x <= width_ && c.y >= 1 && c.y <= height_;
  }

  // True iff c is inside the grid and not an obstacle.
  bool feasible(Cell c) const {
    return in_bounds(c) && !obstacle_[cell_index(c)];
  }

  // All feasible cells reachable in one step from c, including c itself.
  // Sorted by (x, y). Querying an infeasible cell is a contract violation
  // and throws std::invalid_argument.
  std::vector<Cell> neighbors(Cell c) const;

  // Minimum number of motion steps from `from` to every cell, honoring
  // obstacles (-1 for unreachable or infeasible cells). Indexed by
  // cell_index.
  std::vector<int> hop_distances(Cell from) const;

  std::size_t cell_index(Cell c) const {
    return static_cast<std::size_t>(c.y - 1) * width_ + (c.x - 1);
  }

  // Canonical map text; parse_environment(map_text()) reproduces *this.
  std::string map_text() const;

  // FNV-1a hash of the canonical map text; used to key action-set caches.
  std::uint64_t layout_hash() const;

  friend bool operator==(const GridEnvironment&,
                         const GridEnvironment&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> obstacle_;  // row-major mask
  std::vector<Cell> stations_;
};

// Parses a map: '.' feasible, '#' obstacle, digit k the k-th station. The
// first text line is the top row of the grid (y = height). Rejects ragged
// lines, characters outside {., #, 1..9}, duplicate or gapped station
// digits, and maps without stations; diagnostics name the offending line
// and column.
GridEnvironment parse_environment(std::string_view map_text);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace cotask

#endif  // COTASK_ENVIRONMENT_H_
