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

#ifndef PERCEPT_FORGE_MESH_HPP_
#define PERCEPT_FORGE_MESH_HPP_

#include <array>
#include <string>
#include <vector>

namespace percept {

/// Indexed triangle surface in millimetres. Triangles wind counter-clockwise
/// seen from outside, so a closed mesh has positive volume.
struct TriangleMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> triangles;

  bool empty() const { return triangles.empty(); }
};

/// True iff every undirected edge is shared by exactly two triangles.
bool is_watertight(const TriangleMesh& mesh);

/// True iff every directed edge appears exactly once, i.e. neighboring
/// triangles wind consistently.
bool is_consistently_oriented(const TriangleMesh& mesh);

/// Enclosed volume in mm^3 via signed tetrahedra against the origin;
/// positive for outward-wound surfaces. Throws InvalidArgument unless the
/// mesh is watertight and consistently oriented.
double mesh_volume(const TriangleMesh& mesh);

double surface_area(const TriangleMesh& mesh);

/// Number of edge-connected surface components.
int connected_components(const TriangleMesh& mesh);

/// Drops zero-area triangles and unreferenced vertices.
TriangleMesh cleaned(const TriangleMesh& mesh);

TriangleMesh translated(const TriangleMesh& mesh,
                        const std::array<double, 3>& offset);
TriangleMesh scaled(const TriangleMesh& mesh,
                    const std::array<double, 3>& factors);
/// Rotation about the +z axis through the origin.
TriangleMesh rotated_z(const TriangleMesh& mesh, double theta);

std::array<double, 3> min_corner(const TriangleMesh& mesh);
std::array<double, 3> max_corner(const TriangleMesh& mesh);

/// Radius of the smallest z-axis cylinder about the origin containing every
/// vertex; bounds the footprint under any rotation about z.
double footprint_circumradius(const TriangleMesh& mesh);

/// ASCII OBJ with v/f records only; faces are triangles, 1-based indices.
std::string to_obj(const TriangleMesh& mesh);
TriangleMesh from_obj(const std::string& text);

}  // namespace percept

#endif  // PERCEPT_FORGE_MESH_HPP_
