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

#ifndef PERCEPT_FORGE_SMOOTH_HPP_
#define PERCEPT_FORGE_SMOOTH_HPP_

#include "percept/forge/mesh.hpp"

namespace percept {

/// Uniform Laplacian smoothing: per iteration every vertex moves lambda of
/// the way toward the centroid of its edge neighbors. Connectivity is
/// untouched, so watertightness survives.
TriangleMesh smooth_mesh(const TriangleMesh& mesh, int iterations = 10,
                         double lambda = 0.5);

}  // namespace percept

#endif  // PERCEPT_FORGE_SMOOTH_HPP_
