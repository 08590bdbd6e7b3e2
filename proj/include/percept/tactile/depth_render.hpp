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

#ifndef PERCEPT_TACTILE_DEPTH_RENDER_HPP_
#define PERCEPT_TACTILE_DEPTH_RENDER_HPP_

#include <array>
#include <memory>
#include <vector>

#include "percept/core/tensor.hpp"
#include "percept/forge/mesh.hpp"

namespace percept {

inline constexpr int kTactileImageSize = 64;
inline constexpr double kSensorFootprintMm = 14.0;
inline constexpr double kGelThicknessMm = 4.25;

/// Read-only acceleration structure for vertical ray queries against one
/// mesh: a bounding-rectangle tree over the triangles' xy projections.
class DepthBvh {
 public:
  explicit DepthBvh(const TriangleMesh& mesh);

  /// Highest surface z on the vertical line through (x, y) in the mesh
  /// frame; -infinity when the line misses every triangle. Edge hits are
  /// inclusive; triangles with a degenerate xy projection are ignored.
  double height_at(double x, double y) const;

 private:
  struct Triangle {
    double ax, ay, az;
    double bx, by, bz;
    double cx, cy, cz;
    double min_x, min_y, max_x, max_y;
  };
  struct Node {
    double min_x, min_y, max_x, max_y;
    int left = -1;   // internal: child indices; leaf: left == -1
    int right = -1;
    int begin = 0;   // leaf: triangle range
    int end = 0;
  };

  int build(std::vector<int>& order, int begin, int end,
            const std::vector<Triangle>& tris);

  std::vector<Triangle> triangles_;
  std::vector<Node> nodes_;
};

/// A placed object: immutable mesh + query structure, mutable planar pose.
/// The mesh rests on the platform in its own frame (min z = 0); the pose
/// rotates about z by theta, then translates by (x, y).
struct ObjectInstance {
  std::shared_ptr<const TriangleMesh> mesh;
  std::shared_ptr<const DepthBvh> bvh;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double circumradius = 0.0;  // xy distance from frame origin to farthest vertex
};

ObjectInstance make_object(std::shared_ptr<const TriangleMesh> mesh,
                           std::shared_ptr<const DepthBvh> bvh, double x,
                           double y, double theta);

/// Orthographic top-down penetration render over the 14x14 mm sensor
/// footprint centered at (sensor[0], sensor[1]): per pixel the depth is
/// max(0, highest surface z - sensor z), clipped to the gel thickness.
/// Row 0 is the +y edge of the footprint. Values in mm.
std::vector<double> render_depth(const std::vector<ObjectInstance>& objects,
                                 std::array<double, 3> sensor);

/// Maps depths in [0, gel thickness] to a 64x64x3 tensor via
/// n = 1 - 2 d / 4.25 (no contact -> +1, full penetration -> -1), the same
/// map replicated across the three channels. Out-of-range input throws
/// InvalidState.
Tensor depth_to_obs(const std::vector<double>& depth);

}  // namespace percept

#endif  // PERCEPT_TACTILE_DEPTH_RENDER_HPP_
