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

#include "percept/loc/map_gen.hpp"

#include <utility>
#include <vector>

#include "percept/core/rng.hpp"

namespace percept {
namespace {

BinaryImage full_image(int size, bool value) {
  BinaryImage img = BinaryImage::filled(size, size, value);
  return img;
}

void split_region(BinaryImage& cells, Rng& rng, int x0, int y0, int w, int h) {
  const bool can_vertical = w >= 2 * kRoomsMinSize + 1;
  const bool can_horizontal = h >= 2 * kRoomsMinSize + 1;
  if (!can_vertical && !can_horizontal) return;
  bool vertical;
  if (can_vertical && can_horizontal) {
    vertical = w != h ? w > h : rng.uniform_int(2) == 0;
  } else {
    vertical = can_vertical;
  }
  if (vertical) {
    const int c = x0 + kRoomsMinSize + rng.uniform_int(w - 2 * kRoomsMinSize);
    const int door_len = 1 + rng.uniform_int(2);
    const int door_start = y0 + rng.uniform_int(h - door_len + 1);
    for (int y = y0; y < y0 + h; ++y) {
      if (y < door_start || y >= door_start + door_len) cells.set(c, y, true);
    }
    split_region(cells, rng, x0, y0, c - x0, h);
    split_region(cells, rng, c + 1, y0, x0 + w - c - 1, h);
  } else {
    const int r = y0 + kRoomsMinSize + rng.uniform_int(h - 2 * kRoomsMinSize);
    const int door_len = 1 + rng.uniform_int(2);
    const int door_start = x0 + rng.uniform_int(w - door_len + 1);
    for (int x = x0; x < x0 + w; ++x) {
      if (x < door_start || x >= door_start + door_len) cells.set(x, r, true);
    }
    split_region(cells, rng, x0, y0, w, r - y0);
    split_region(cells, rng, x0, r + 1, w, y0 + h - r - 1);
  }
}

}  // namespace

GridMap generate_maze(std::uint64_t seed) {
  Rng rng(seed);
  GridMap map{full_image(kMazeSize, true), MapKind::kMaze};
  const int rooms = (kMazeSize - 1) / 2;  // rooms per axis, at odd coordinates
  auto carve_room = [&](int i, int j) {
    map.cells.set(2 * i + 1, 2 * j + 1, false);
  };
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(rooms) * rooms, 0);
  auto seen = [&](int i, int j) -> std::uint8_t& {
    return visited[static_cast<std::size_t>(j) * rooms + i];
  };
  const int start = rng.uniform_int(rooms * rooms);
  std::vector<std::pair<int, int>> stack{{start % rooms, start / rooms}};
  seen(stack[0].first, stack[0].second) = 1;
  carve_room(stack[0].first, stack[0].second);
  const int dx[4] = {1, -1, 0, 0};
  const int dy[4] = {0, 0, 1, -1};
  while (!stack.empty()) {
    auto [ci, cj] = stack.back();
    int options[4];
    int count = 0;
    for (int k = 0; k < 4; ++k) {
      const int ni = ci + dx[k];
      const int nj = cj + dy[k];
      if (ni < 0 || ni >= rooms || nj < 0 || nj >= rooms) continue;
      if (!seen(ni, nj)) options[count++] = k;
    }
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const int k = options[rng.uniform_int(count)];
    const int ni = ci + dx[k];
    const int nj = cj + dy[k];
    map.cells.set(2 * ci + 1 + dx[k], 2 * cj + 1 + dy[k], false);
    carve_room(ni, nj);
    seen(ni, nj) = 1;
    stack.emplace_back(ni, nj);
  }
  return map;
}

GridMap generate_rooms(std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    GridMap map{full_image(kRoomsSize, false), MapKind::kRooms};
    for (int x = 0; x < kRoomsSize; ++x) {
      map.cells.set(x, 0, true);
      map.cells.set(x, kRoomsSize - 1, true);
    }
    for (int y = 0; y < kRoomsSize; ++y) {
      map.cells.set(0, y, true);
      map.cells.set(kRoomsSize - 1, y, true);
    }
    split_region(map.cells, rng, 1, 1, kRoomsSize - 2, kRoomsSize - 2);
    // A wall built later can seal a door cut earlier; keep only layouts whose
    // free space stayed connected.
    if (map.valid()) return map;
  }
}

}  // namespace percept
