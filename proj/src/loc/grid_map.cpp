/*
 * Copyright 2026 The Percept Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "percept/loc/grid_map.hpp"

#include <fstream>
#include <utility>

#include "percept/core/error.hpp"

namespace percept {

std::vector<std::pair<int, int>> GridMap::free_cells() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < height(); ++y) {
    for (int x = 0; x < width(); ++x) {
      if (free_at(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

bool GridMap::valid() const {
  const int w = width();
  const int h = height();
  if (w < 3 || h < 3) return false;
  for (int x = 0; x < w; ++x) {
    if (!cells.at(x, 0) || !cells.at(x, h - 1)) return false;
  }
  for (int y = 0; y < h; ++y) {
    if (!cells.at(0, y) || !cells.at(w - 1, y)) return false;
  }
  const auto free_list = free_cells();
  if (free_list.empty()) return false;
  // Flood fill from the first free cell; all free cells must be reached.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::pair<int, int>> stack{free_list.front()};
  seen[static_cast<std::size_t>(free_list.front().second) * w +
       free_list.front().first] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    ++reached;
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int nx = x + dx[k];
      const int ny = y + dy[k];
      if (!free_at(nx, ny)) continue;
      std::uint8_t& mark = seen[static_cast<std::size_t>(ny) * w + nx];
      if (mark) continue;
      mark = 1;
      stack.emplace_back(nx, ny);
    }
  }
  return reached == free_list.size();
}

void save_grid_map(const GridMap& map, std::uint64_t seed,
                   const std::string& pbm_path,
                   const std::string& manifest_path) {
  {
    std::ofstream out(pbm_path);
    if (!out) throw InvalidArgument("cannot write " + pbm_path);
    out << to_pbm(map.cells);
  }
  std::ofstream side(manifest_path);
  if (!side) throw InvalidArgument("cannot write " + manifest_path);
  side << (map.kind == MapKind::kMaze ? "maze" : "rooms") << " seed " << seed
       << "\n";
}

GridMap load_grid_map(const std::string& pbm_path, MapKind kind) {
  std::ifstream in(pbm_path);
  if (!in) throw InvalidArgument("cannot read " + pbm_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  GridMap map{from_pbm(text), kind};
  if (!map.valid()) throw InvalidArgument("invalid grid map in " + pbm_path);
  return map;
}

}  // namespace percept
