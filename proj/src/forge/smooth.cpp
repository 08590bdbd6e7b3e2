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

#include "percept/forge/smooth.hpp"

#include <cstddef>
#include <vector>

#include "percept/core/error.hpp"

namespace percept {

TriangleMesh smooth_mesh(const TriangleMesh& mesh, int iterations,
                         double lambda) {
  if (iterations < 0) {
    throw InvalidArgument("smooth_mesh: negative iteration count");
  }
  TriangleMesh out = mesh;
  if (iterations == 0 || mesh.vertices.empty()) return out;

  // Unique edge neighbors per vertex, built once; duplicates from the two
  // triangles sharing an edge are filtered with a seen-stamp.
  const std::size_t n = mesh.vertices.size();
  std::vector<std::vector<int>> neighbors(n);
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e];
      const int b = tri[(e + 1) % 3];
      neighbors[static_cast<std::size_t>(a)].push_back(b);
      neighbors[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::vector<int> stamp(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = neighbors[v];
    std::size_t kept = 0;
    for (int u : list) {
      if (stamp[static_cast<std::size_t>(u)] != static_cast<int>(v)) {
        stamp[static_cast<std::size_t>(u)] = static_cast<int>(v);
        list[kept++] = u;
      }
    }
    list.resize(kept);
  }

  std::vector<std::array<double, 3>> next(n);
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto& list = neighbors[v];
      if (list.empty()) {
        next[v] = out.vertices[v];
        continue;
      }
      std::array<double, 3> centroid = {0.0, 0.0, 0.0};
      for (int u : list) {
        const auto& p = out.vertices[static_cast<std::size_t>(u)];
        centroid[0] += p[0];
        centroid[1] += p[1];
        centroid[2] += p[2];
      }
      const double inv = 1.0 / static_cast<double>(list.size());
      const auto& p = out.vertices[v];
      for (int i = 0; i < 3; ++i) {
        next[v][static_cast<std::size_t>(i)] =
            p[static_cast<std::size_t>(i)] +
            lambda * (centroid[static_cast<std::size_t>(i)] * inv -
                      p[static_cast<std::size_t>(i)]);
      }
    }
    out.vertices.swap(next);
  }
  return out;
}

}  // namespace percept
