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

#include "percept/forge/toolbox.hpp"

#include <cmath>
#include <cstddef>

#include "percept/core/error.hpp"

namespace percept {

namespace {

constexpr double kHandleLengthMm = 70.0;
constexpr double kHandleHalfWidthMm = 6.0;
constexpr double kHandleCornerRadiusMm = 3.0;
constexpr double kHeadRadiusMm = 14.0;
constexpr double kJawHalfGapMm = 5.0;
constexpr double kJawRootXMm = 4.0;

void add_point(Polygon2& poly, double x, double y) {
  if (!poly.empty()) {
    const Point2& last = poly.back();
    if (std::abs(last[0] - x) < 1e-12 && std::abs(last[1] - y) < 1e-12) return;
  }
  poly.push_back({x, y});
}

void add_arc(Polygon2& poly, double cx, double cy, double r, double a0,
             double a1, int segments) {
  for (int i = 0; i <= segments; ++i) {
    const double t = a0 + (a1 - a0) * i / segments;
    add_point(poly, cx + r * std::cos(t), cy + r * std::sin(t));
  }
}

}  // namespace

double toolbox_variant_scale(int variant) {
  if (variant < 0 || variant >= kToolboxVariantCount) {
    throw InvalidArgument("toolbox_variant_scale: variant out of range");
  }
  static constexpr double kScales[kToolboxVariantCount] = {0.6, 0.75, 0.9,
                                                           1.05};
  return kScales[variant];
}

Polygon2 wrench_outline(double scale) {
  if (scale <= 0.0) {
    throw InvalidArgument("wrench_outline: scale must be positive");
  }
  // Head disk centered at the origin, handle along -x, jaw opening along +x.
  const double tip_x = std::sqrt(kHeadRadiusMm * kHeadRadiusMm -
                                 kJawHalfGapMm * kJawHalfGapMm);
  const double attach_x = -std::sqrt(kHeadRadiusMm * kHeadRadiusMm -
                                     kHandleHalfWidthMm * kHandleHalfWidthMm);
  const double tip_angle = std::atan2(kJawHalfGapMm, tip_x);
  const double attach_angle = std::atan2(kHandleHalfWidthMm, attach_x);
  const double end_x = -kHandleLengthMm;
  const double corner_x = end_x + kHandleCornerRadiusMm;
  const double corner_y = kHandleHalfWidthMm - kHandleCornerRadiusMm;

  Polygon2 poly;
  // Upper jaw tip, counter-clockwise over the back of the head.
  add_arc(poly, 0.0, 0.0, kHeadRadiusMm, tip_angle, attach_angle, 24);
  add_point(poly, corner_x, kHandleHalfWidthMm);
  add_arc(poly, corner_x, corner_y, kHandleCornerRadiusMm, M_PI / 2.0, M_PI,
          6);
  add_point(poly, end_x, -corner_y);
  add_arc(poly, corner_x, -corner_y, kHandleCornerRadiusMm, M_PI,
          1.5 * M_PI, 6);
  add_point(poly, attach_x, -kHandleHalfWidthMm);
  add_arc(poly, 0.0, 0.0, kHeadRadiusMm, -attach_angle, -tip_angle, 24);
  // Jaw: lower inner face, semicircular root, upper inner face.
  add_point(poly, kJawRootXMm, -kJawHalfGapMm);
  add_arc(poly, kJawRootXMm, 0.0, kJawHalfGapMm, -M_PI / 2.0, -1.5 * M_PI,
          12);
  add_point(poly, tip_x, kJawHalfGapMm);
  if (std::abs(poly.back()[0] - poly.front()[0]) < 1e-12 &&
      std::abs(poly.back()[1] - poly.front()[1]) < 1e-12) {
    poly.pop_back();
  }

  // Shift to the area centroid so rotation pivots through it, then scale.
  const double area = polygon_area(poly);
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    const double w = a[0] * b[1] - b[0] * a[1];
    cx += (a[0] + b[0]) * w;
    cy += (a[1] + b[1]) * w;
  }
  cx /= 6.0 * area;
  cy /= 6.0 * area;
  for (Point2& p : poly) {
    p[0] = (p[0] - cx) * scale;
    p[1] = (p[1] - cy) * scale;
  }
  return poly;
}

TriangleMesh toolbox_tool_mesh(int variant) {
  const double scale = toolbox_variant_scale(variant);
  return extrude_polygon(wrench_outline(scale), kToolHeightMm * scale);
}

}  // namespace percept
