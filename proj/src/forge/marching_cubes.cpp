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

#include "percept/forge/marching_cubes.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace percept {

namespace {

// Cube corner i sits at offset (i&1, i>>1&1, i>>2&1) from the cube origin.
// The 12 cube edges, each identified by its axis and the corner with that
// axis bit clear.
struct CubeEdge {
  int axis;
  int corner;  // endpoint with the axis bit clear
};

constexpr std::array<CubeEdge, 12> kEdges = {{
    {0, 0}, {0, 2}, {0, 4}, {0, 6},  // x-aligned
    {1, 0}, {1, 1}, {1, 4}, {1, 5},  // y-aligned
    {2, 0}, {2, 1}, {2, 2}, {2, 3},  // z-aligned
}};

// The six faces as corner cycles, counter-clockwise seen from outside the
// cube. Consecutive corners differ in exactly one bit (a cube edge).
constexpr std::array<std::array<int, 4>, 6> kFaceCycles = {{
    {0, 2, 3, 1},  // z = 0
    {4, 5, 7, 6},  // z = 1
    {0, 1, 5, 4},  // y = 0
    {2, 6, 7, 3},  // y = 1
    {0, 4, 6, 2},  // x = 0
    {1, 3, 7, 5},  // x = 1
}};

int edge_index(int a, int b) {
  if ((a & ~b) != 0) std::swap(a, b);  // make a the lower corner
  const int diff = a ^ b;
  const int axis = diff == 1 ? 0 : diff == 2 ? 1 : 2;
  for (int e = 0; e < 12; ++e) {
    if (kEdges[static_cast<std::size_t>(e)].axis == axis &&
        kEdges[static_cast<std::size_t>(e)].corner == a) {
      return e;
    }
  }
  return -1;  // unreachable for valid cube edges
}

// Triangles per cube configuration, as triples of edge indices. Generated
// once by tracing oriented surface contours on the cube boundary.
using CaseTable = std::array<std::vector<std::array<int, 3>>, 256>;

// Walks one face's boundary and emits the oriented contour segments crossing
// it. Each inside-to-outside crossing connects back to the nearest preceding
// outside-to-inside crossing, which on ambiguous faces (diagonal corners
// occupied) always keeps the occupied corners separated — the choice that
// makes adjacent cubes agree.
void face_segments(int mask, const std::array<int, 4>& cycle,
                   std::array<int, 12>& next_by_start) {
  struct Crossing {
    int edge;
    bool entering;  // outside -> inside along the walk
  };
  std::vector<Crossing> crossings;
  for (int i = 0; i < 4; ++i) {
    const int a = cycle[static_cast<std::size_t>(i)];
    const int b = cycle[static_cast<std::size_t>((i + 1) % 4)];
    const bool a_in = (mask >> a) & 1;
    const bool b_in = (mask >> b) & 1;
    if (a_in == b_in) continue;
    crossings.push_back({edge_index(a, b), b_in});
  }
  const int n = static_cast<int>(crossings.size());
  for (int i = 0; i < n; ++i) {
    if (crossings[static_cast<std::size_t>(i)].entering) continue;
    // Segment from this inside->outside crossing to the cyclically previous
    // outside->inside crossing.
    for (int back = 1; back <= n; ++back) {
      const Crossing& prev =
          crossings[static_cast<std::size_t>((i - back + n) % n)];
      if (prev.entering) {
        next_by_start[static_cast<std::size_t>(
            crossings[static_cast<std::size_t>(i)].edge)] = prev.edge;
        break;
      }
    }
  }
}

CaseTable build_case_table() {
  CaseTable table;
  for (int mask = 0; mask < 256; ++mask) {
    std::array<int, 12> next_by_start;
    next_by_start.fill(-1);
    for (const auto& cycle : kFaceCycles) {
      face_segments(mask, cycle, next_by_start);
    }
    std::array<bool, 12> used{};
    for (int start = 0; start < 12; ++start) {
      if (next_by_start[static_cast<std::size_t>(start)] < 0 ||
          used[static_cast<std::size_t>(start)]) {
        continue;
      }
      std::vector<int> loop;
      int e = start;
      do {
        loop.push_back(e);
        used[static_cast<std::size_t>(e)] = true;
        e = next_by_start[static_cast<std::size_t>(e)];
      } while (e != start);
      // The trace winds with the material on the wrong side; reversing it
      // makes the fan triangles face outward.
      std::vector<int> rev(loop.rbegin(), loop.rend());
      for (std::size_t i = 1; i + 1 < rev.size(); ++i) {
        table[static_cast<std::size_t>(mask)].push_back(
            {rev[0], rev[i], rev[i + 1]});
      }
    }
  }
  return table;
}

const CaseTable& case_table() {
  static const CaseTable table = build_case_table();
  return table;
}

}  // namespace

TriangleMesh marching_cubes(const OccupancyGrid3D& grid) {
  const CaseTable& table = case_table();
  // Sample lattice padded by one empty shell on every side.
  const int px = grid.nx + 2;
  const int py = grid.ny + 2;
  const int pz = grid.nz + 2;
  const auto sample = [&](int x, int y, int z) -> bool {
    --x;
    --y;
    --z;
    if (x < 0 || y < 0 || z < 0 || x >= grid.nx || y >= grid.ny ||
        z >= grid.nz) {
      return false;
    }
    return grid.at(x, y, z);
  };

  TriangleMesh mesh;
  std::unordered_map<std::uint64_t, int> vertex_by_edge;
  const auto weld = [&](int cx, int cy, int cz, int edge) {
    const CubeEdge& e = kEdges[static_cast<std::size_t>(edge)];
    const int c0 = e.corner;
    const int x0 = cx + (c0 & 1);
    const int y0 = cy + ((c0 >> 1) & 1);
    const int z0 = cz + ((c0 >> 2) & 1);
    const std::uint64_t key =
        ((static_cast<std::uint64_t>(z0) * static_cast<std::uint64_t>(py) +
          static_cast<std::uint64_t>(y0)) *
             static_cast<std::uint64_t>(px) +
         static_cast<std::uint64_t>(x0)) *
            3 +
        static_cast<std::uint64_t>(e.axis);
    const auto [it, inserted] =
        vertex_by_edge.try_emplace(key, static_cast<int>(mesh.vertices.size()));
    if (inserted) {
      // Midpoint of the cut edge, shifted back into unpadded voxel units.
      std::array<double, 3> v = {static_cast<double>(x0) - 1.0,
                                 static_cast<double>(y0) - 1.0,
                                 static_cast<double>(z0) - 1.0};
      v[static_cast<std::size_t>(e.axis)] += 0.5;
      mesh.vertices.push_back(v);
    }
    return it->second;
  };

  for (int cz = 0; cz < pz - 1; ++cz) {
    for (int cy = 0; cy < py - 1; ++cy) {
      for (int cx = 0; cx < px - 1; ++cx) {
        int mask = 0;
        for (int c = 0; c < 8; ++c) {
          if (sample(cx + (c & 1), cy + ((c >> 1) & 1), cz + ((c >> 2) & 1))) {
            mask |= 1 << c;
          }
        }
        if (mask == 0 || mask == 255) continue;
        for (const auto& tri : table[static_cast<std::size_t>(mask)]) {
          mesh.triangles.push_back({weld(cx, cy, cz, tri[0]),
                                    weld(cx, cy, cz, tri[1]),
                                    weld(cx, cy, cz, tri[2])});
        }
      }
    }
  }
  return mesh;
}

}  // namespace percept
