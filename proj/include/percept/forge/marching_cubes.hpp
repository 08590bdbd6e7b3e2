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

#ifndef PERCEPT_FORGE_MARCHING_CUBES_HPP_
#define PERCEPT_FORGE_MARCHING_CUBES_HPP_

#include "percept/forge/mesh.hpp"
#include "percept/forge/occupancy.hpp"

namespace percept {

/// Extracts the isosurface of a binary voxel field. Voxels are treated as
/// {0,1} samples at integer coordinates, so surface vertices sit on edge
/// midpoints; the grid is padded with one empty sample shell internally,
/// which closes the surface. Ambiguous cube faces always separate the
/// occupied corners, making patches agree across cube boundaries; the result
/// is watertight and wound outward. Vertices are emitted in voxel units.
TriangleMesh marching_cubes(const OccupancyGrid3D& grid);

}  // namespace percept

#endif  // PERCEPT_FORGE_MARCHING_CUBES_HPP_
