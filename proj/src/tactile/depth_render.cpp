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

#include "percept/tactile/depth_render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "percept/core/error.hpp"

namespace percept {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLeafSize = 8;

}  // namespace

DepthBvh::DepthBvh(const TriangleMesh& mesh) {
  std::vector<Triangle> tris;
  tris.reserve(mesh.triangles.size());
  for (const auto& t : mesh.triangles) {
    const auto& a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const auto& b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const auto& c = mesh.vertices[static_cast<std::size_t>(t[2])];
    // Vertical triangles project to a segment and cannot own a pixel.
    const double area2 =
        (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    if (area2 == 0.0) continue;
    Triangle tri;
    tri.ax = a[0]; tri.ay = a[1]; tri.az = a[2];
    tri.bx = b[0]; tri.by = b[1]; tri.bz = b[2];
    tri.cx = c[0]; tri.cy = c[1]; tri.cz = c[2];
    tri.min_x = std::min({a[0], b[0], c[0]});
    tri.min_y = std::min({a[1], b[1], c[1]});
    tri.max_x = std::max({a[0], b[0], c[0]});
    tri.max_y = std::max({a[1], b[1], c[1]});
    tris.push_back(tri);
  }
  if (tris.empty()) return;
  std::vector<int> order(tris.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  triangles_.reserve(tris.size());
  nodes_.reserve(2 * tris.size() / kLeafSize + 2);
  build(order, 0, static_cast<int>(order.size()), tris);
}

int DepthBvh::build(std::vector<int>& order, int begin, int end,
                    const std::vector<Triangle>& tris) {
  const int index = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  double min_x = kInf, min_y = kInf, max_x = -kInf, max_y = -kInf;
  for (int i = begin; i < end; ++i) {
    const Triangle& t = tris[static_cast<std::size_t>(order[i])];
    min_x = std::min(min_x, t.min_x);
    min_y = std::min(min_y, t.min_y);
    max_x = std::max(max_x, t.max_x);
    max_y = std::max(max_y, t.max_y);
  }
  nodes_[index].min_x = min_x;
  nodes_[index].min_y = min_y;
  nodes_[index].max_x = max_x;
  nodes_[index].max_y = max_y;
  if (end - begin <= kLeafSize) {
    nodes_[index].begin = static_cast<int>(triangles_.size());
    for (int i = begin; i < end; ++i) {
      triangles_.push_back(tris[static_cast<std::size_t>(order[i])]);
    }
    nodes_[index].end = static_cast<int>(triangles_.size());
    return index;
  }
  const bool split_x = max_x - min_x >= max_y - min_y;
  const int mid = (begin + end) / 2;
  std::nth_element(order.begin() + begin, order.begin() + mid,
                   order.begin() + end, [&](int lhs, int rhs) {
                     const Triangle& l = tris[static_cast<std::size_t>(lhs)];
                     const Triangle& r = tris[static_cast<std::size_t>(rhs)];
                     return split_x ? l.min_x + l.max_x < r.min_x + r.max_x
                                    : l.min_y + l.max_y < r.min_y + r.max_y;
                   });
  const int left = build(order, begin, mid, tris);
  const int right = build(order, mid, end, tris);
  nodes_[index].left = left;
  nodes_[index].right = right;
  return index;
}

double DepthBvh::height_at(double x, double y) const {
  if (nodes_.empty()) return -kInf;
  double best = -kInf;
  int stack[128];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[static_cast<std::size_t>(stack[--top])];
    if (x < node.min_x || x > node.max_x || y < node.min_y || y > node.max_y) {
      continue;
    }
    if (node.left < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        const Triangle& t = triangles_[static_cast<std::size_t>(i)];
        if (x < t.min_x || x > t.max_x || y < t.min_y || y > t.max_y) continue;
        const double e0 =
            (t.bx - t.ax) * (y - t.ay) - (t.by - t.ay) * (x - t.ax);
        const double e1 =
            (t.cx - t.bx) * (y - t.by) - (t.cy - t.by) * (x - t.bx);
        const double e2 =
            (t.ax - t.cx) * (y - t.cy) - (t.ay - t.cy) * (x - t.cx);
        const bool inside = (e0 >= 0.0 && e1 >= 0.0 && e2 >= 0.0) ||
                            (e0 <= 0.0 && e1 <= 0.0 && e2 <= 0.0);
        if (!inside) continue;
        const double area2 = (t.bx - t.ax) * (t.cy - t.ay) -
                             (t.cx - t.ax) * (t.by - t.ay);
        const double wa = ((t.bx - x) * (t.cy - y) - (t.cx - x) * (t.by - y)) /
                          area2;
        const double wb = ((t.cx - x) * (t.ay - y) - (t.ax - x) * (t.cy - y)) /
                          area2;
        const double wc = 1.0 - wa - wb;
        best = std::max(best, wa * t.az + wb * t.bz + wc * t.cz);
      }
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  return best;
}

ObjectInstance make_object(std::shared_ptr<const TriangleMesh> mesh,
                           std::shared_ptr<const DepthBvh> bvh, double x,
                           double y, double theta) {
  ObjectInstance obj;
  obj.circumradius = footprint_circumradius(*mesh);
  obj.mesh = std::move(mesh);
  obj.bvh = std::move(bvh);
  obj.x = x;
  obj.y = y;
  obj.theta = theta;
  return obj;
}

std::vector<double> render_depth(const std::vector<ObjectInstance>& objects,
                                 std::array<double, 3> sensor) {
  const int n = kTactileImageSize;
  const double pixel = kSensorFootprintMm / n;
  const double half = kSensorFootprintMm / 2.0;
  std::vector<double> depth(static_cast<std::size_t>(n) * n, 0.0);
  struct Frame {
    const DepthBvh* bvh;
    double x, y, cos_t, sin_t;
  };
  std::vector<Frame> frames;
  frames.reserve(objects.size());
  for (const auto& obj : objects) {
    frames.push_back({obj.bvh.get(), obj.x, obj.y, std::cos(obj.theta),
                      std::sin(obj.theta)});
  }
  for (int r = 0; r < n; ++r) {
    const double wy = sensor[1] + half - (r + 0.5) * pixel;
    for (int c = 0; c < n; ++c) {
      const double wx = sensor[0] - half + (c + 0.5) * pixel;
      double height = -kInf;
      for (const Frame& f : frames) {
        const double dx = wx - f.x;
        const double dy = wy - f.y;
        // Rotate the ray into the object frame (inverse of the pose).
        const double lx = f.cos_t * dx + f.sin_t * dy;
        const double ly = -f.sin_t * dx + f.cos_t * dy;
        height = std::max(height, f.bvh->height_at(lx, ly));
      }
      const double d = height - sensor[2];
      depth[static_cast<std::size_t>(r) * n + c] =
          d <= 0.0 ? 0.0 : std::min(d, kGelThicknessMm);
    }
  }
  return depth;
}

Tensor depth_to_obs(const std::vector<double>& depth) {
  const int n = kTactileImageSize;
  if (depth.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("depth_to_obs: expected 64x64 map");
  }
  Tensor t;
  t.shape = {n, n, 3};
  t.data.resize(depth.size() * 3);
  for (std::size_t i = 0; i < depth.size(); ++i) {
    const double d = depth[i];
    if (!(d >= 0.0 && d <= kGelThicknessMm)) {
      throw InvalidState("depth_to_obs: depth outside [0, gel thickness]");
    }
    const float v = static_cast<float>(1.0 - 2.0 * d / kGelThicknessMm);
    t.data[3 * i] = v;
    t.data[3 * i + 1] = v;
    t.data[3 * i + 2] = v;
  }
  return t;
}

}  // namespace percept
