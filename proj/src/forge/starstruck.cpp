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

#include "percept/forge/starstruck.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>

#include "percept/core/error.hpp"
#include "percept/core/rng.hpp"

namespace percept {

Polygon2 shape_outline(ShapeKind shape) {
  Polygon2 poly;
  switch (shape) {
    case ShapeKind::kStar: {
      // Ten alternating outer/inner vertices, one point up.
      for (int i = 0; i < 10; ++i) {
        const double r = i % 2 == 0 ? kStarOuterRadiusMm : kStarInnerRadiusMm;
        const double a = M_PI / 2.0 + i * M_PI / 5.0;
        poly.push_back({r * std::cos(a), r * std::sin(a)});
      }
      break;
    }
    case ShapeKind::kCircle: {
      for (int i = 0; i < kCircleSegments; ++i) {
        const double a = 2.0 * M_PI * i / kCircleSegments;
        poly.push_back(
            {kCircleRadiusMm * std::cos(a), kCircleRadiusMm * std::sin(a)});
      }
      break;
    }
    case ShapeKind::kSquare: {
      const double h = kSquareSideMm / 2.0;
      poly = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
      break;
    }
  }
  return poly;
}

std::vector<Polygon2> shape_convex_parts(ShapeKind shape) {
  if (shape != ShapeKind::kStar) return {shape_outline(shape)};
  // The star is star-shaped about its center: fan triangles cover it.
  const Polygon2 outline = shape_outline(ShapeKind::kStar);
  std::vector<Polygon2> parts;
  for (std::size_t i = 0; i < outline.size(); ++i) {
    parts.push_back(
        {{0.0, 0.0}, outline[i], outline[(i + 1) % outline.size()]});
  }
  return parts;
}

double shape_circumradius(ShapeKind shape) {
  switch (shape) {
    case ShapeKind::kStar:
      return kStarOuterRadiusMm;
    case ShapeKind::kCircle:
      return kCircleRadiusMm;
    case ShapeKind::kSquare:
      return kSquareSideMm * M_SQRT1_2;
  }
  return 0.0;
}

namespace {

Polygon2 transformed(const Polygon2& poly, double x, double y, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Polygon2 out;
  out.reserve(poly.size());
  for (const Point2& p : poly) {
    out.push_back({x + c * p[0] - s * p[1], y + s * p[0] + c * p[1]});
  }
  return out;
}

void project(const Polygon2& poly, double ax, double ay, double& lo,
             double& hi) {
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  for (const Point2& p : poly) {
    const double d = p[0] * ax + p[1] * ay;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
}

bool separated_by_edges_of(const Polygon2& a, const Polygon2& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point2& p = a[i];
    const Point2& q = a[(i + 1) % a.size()];
    const double ax = -(q[1] - p[1]);
    const double ay = q[0] - p[0];
    double lo_a, hi_a, lo_b, hi_b;
    project(a, ax, ay, lo_a, hi_a);
    project(b, ax, ay, lo_b, hi_b);
    if (hi_a <= lo_b || hi_b <= lo_a) return true;
  }
  return false;
}

}  // namespace

Polygon2 transformed_outline(const SceneItem& item) {
  return transformed(shape_outline(item.shape), item.x, item.y, item.theta);
}

bool convex_polygons_overlap(const Polygon2& a, const Polygon2& b) {
  return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

bool items_overlap(const SceneItem& a, const SceneItem& b) {
  std::vector<Polygon2> parts_a;
  for (const Polygon2& part : shape_convex_parts(a.shape)) {
    parts_a.push_back(transformed(part, a.x, a.y, a.theta));
  }
  for (const Polygon2& part : shape_convex_parts(b.shape)) {
    const Polygon2 pb = transformed(part, b.x, b.y, b.theta);
    for (const Polygon2& pa : parts_a) {
      if (convex_polygons_overlap(pa, pb)) return true;
    }
  }
  return false;
}

const char* shape_name(ShapeKind shape) {
  switch (shape) {
    case ShapeKind::kStar:
      return "star";
    case ShapeKind::kCircle:
      return "circle";
    case ShapeKind::kSquare:
      return "square";
  }
  return "star";
}

ShapeKind shape_from_name(const std::string& name) {
  if (name == "star") return ShapeKind::kStar;
  if (name == "circle") return ShapeKind::kCircle;
  if (name == "square") return ShapeKind::kSquare;
  throw InvalidArgument("unknown shape name: " + name);
}

SceneLayout generate_starstruck_scene(std::uint64_t seed) {
  Rng rng(seed);
  // The residue fixes the class so consecutive seed blocks are balanced.
  const int stars = static_cast<int>(seed % 3) + 1;
  const int distractors = rng.uniform_int(6);
  std::vector<ShapeKind> shapes(static_cast<std::size_t>(stars),
                                ShapeKind::kStar);
  for (int i = 0; i < distractors; ++i) {
    shapes.push_back(rng.uniform_int(2) == 0 ? ShapeKind::kCircle
                                             : ShapeKind::kSquare);
  }

  SceneLayout layout;
  layout.star_count = stars;
  const double half = kPlatformSideMm / 2.0;
  while (true) {
    layout.items.clear();
    bool placed_all = true;
    for (ShapeKind shape : shapes) {
      const double margin = half - shape_circumradius(shape);
      bool placed = false;
      for (int attempt = 0; attempt < 100; ++attempt) {
        SceneItem item;
        item.shape = shape;
        item.x = rng.uniform(-margin, margin);
        item.y = rng.uniform(-margin, margin);
        item.theta = rng.uniform(0.0, 2.0 * M_PI);
        bool collides = false;
        for (const SceneItem& other : layout.items) {
          if (items_overlap(item, other)) {
            collides = true;
            break;
          }
        }
        if (!collides) {
          layout.items.push_back(item);
          placed = true;
          break;
        }
      }
      if (!placed) {
        placed_all = false;
        break;
      }
    }
    if (placed_all) return layout;
  }
}

std::string to_manifest(const SceneLayout& layout) {
  std::ostringstream out;
  out.precision(17);
  for (const SceneItem& item : layout.items) {
    out << shape_name(item.shape) << " " << item.x << " " << item.y << " "
        << item.theta << "\n";
  }
  return out.str();
}

SceneLayout from_manifest(const std::string& text) {
  SceneLayout layout;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name;
    SceneItem item;
    if (!(fields >> name >> item.x >> item.y >> item.theta)) {
      throw InvalidArgument("scene manifest: malformed line " +
                            std::to_string(line_no));
    }
    item.shape = shape_from_name(name);
    if (item.shape == ShapeKind::kStar) ++layout.star_count;
    layout.items.push_back(item);
  }
  if (layout.star_count < 1 || layout.star_count > 3) {
    throw InvalidArgument("scene manifest: star count out of range");
  }
  return layout;
}

}  // namespace percept
