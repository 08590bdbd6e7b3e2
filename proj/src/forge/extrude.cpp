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

#include "percept/forge/extrude.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "percept/core/error.hpp"

namespace percept {

namespace {

double cross2(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d) {
  const double d1 = cross2(c, d, a);
  const double d2 = cross2(c, d, b);
  const double d3 = cross2(a, b, c);
  const double d4 = cross2(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

bool point_in_triangle(const Point2& a, const Point2& b, const Point2& c,
                       const Point2& p) {
  const double s1 = cross2(a, b, p);
  const double s2 = cross2(b, c, p);
  const double s3 = cross2(c, a, p);
  return s1 >= 0 && s2 >= 0 && s3 >= 0;  // callers pass CCW triangles
}

}  // namespace

double polygon_area(const Polygon2& poly) {
  double twice = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return twice / 2.0;
}

bool is_simple_polygon(const Polygon2& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    if (a == b) return false;  // zero-length edge
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip the edge itself and the two edges sharing a vertex with it.
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(a, b, poly[j], poly[(j + 1) % n])) return false;
    }
  }
  return true;
}

std::vector<std::array<int, 3>> triangulate_polygon(const Polygon2& poly) {
  if (poly.size() < 3) {
    throw InvalidArgument("triangulate_polygon: need at least 3 vertices");
  }
  if (!is_simple_polygon(poly)) {
    throw InvalidArgument("triangulate_polygon: polygon self-intersects");
  }

  // Work on a CCW index list so ears are convex corners with positive cross.
  std::vector<int> ring(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) ring[i] = static_cast<int>(i);
  if (polygon_area(poly) < 0) std::reverse(ring.begin(), ring.end());

  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(poly.size() - 2);
  while (ring.size() > 3) {
    const std::size_t n = ring.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n; ++i) {
      const int ia = ring[(i + n - 1) % n];
      const int ib = ring[i];
      const int ic = ring[(i + 1) % n];
      const Point2& a = poly[static_cast<std::size_t>(ia)];
      const Point2& b = poly[static_cast<std::size_t>(ib)];
      const Point2& c = poly[static_cast<std::size_t>(ic)];
      if (cross2(a, b, c) <= 0) continue;  // reflex or collinear corner
      bool blocked = false;
      for (std::size_t j = 0; j < n; ++j) {
        const int other = ring[j];
        if (other == ia || other == ib || other == ic) continue;
        if (point_in_triangle(a, b, c, poly[static_cast<std::size_t>(other)])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      triangles.push_back({ia, ib, ic});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) {
      throw InvalidArgument("triangulate_polygon: no ear found (degenerate)");
    }
  }
  triangles.push_back({ring[0], ring[1], ring[2]});
  return triangles;
}

TriangleMesh extrude_polygon(const Polygon2& poly, double height) {
  if (height <= 0) {
    throw InvalidArgument("extrude_polygon: height must be positive");
  }
  Polygon2 loop = poly;
  if (!is_simple_polygon(loop)) {
    throw InvalidArgument("extrude_polygon: polygon self-intersects");
  }
  if (polygon_area(loop) < 0) std::reverse(loop.begin(), loop.end());
  const auto cap = triangulate_polygon(loop);

  const int n = static_cast<int>(loop.size());
  TriangleMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(2 * n));
  for (const Point2& p : loop) mesh.vertices.push_back({p[0], p[1], 0.0});
  for (const Point2& p : loop) mesh.vertices.push_back({p[0], p[1], height});

  for (const auto& tri : cap) {
    // Bottom cap faces -z, top cap +z.
    mesh.triangles.push_back({tri[0], tri[2], tri[1]});
    mesh.triangles.push_back({tri[0] + n, tri[1] + n, tri[2] + n});
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    mesh.triangles.push_back({i, j, j + n});
    mesh.triangles.push_back({i, j + n, i + n});
  }
  return mesh;
}

}  // namespace percept
