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

#include "percept/forge/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "percept/core/error.hpp"

namespace percept {

namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::array<double, 3> sub(const std::array<double, 3>& a,
                          const std::array<double, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::array<double, 3> cross(const std::array<double, 3>& a,
                            const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

void check_indices(const TriangleMesh& mesh) {
  const int n = static_cast<int>(mesh.vertices.size());
  for (const auto& tri : mesh.triangles) {
    for (int idx : tri) {
      if (idx < 0 || idx >= n) {
        throw InvalidArgument("mesh: triangle index out of range");
      }
    }
  }
}

}  // namespace

bool is_watertight(const TriangleMesh& mesh) {
  if (mesh.triangles.empty()) return false;
  check_indices(mesh);
  std::unordered_map<std::uint64_t, int> edge_count;
  edge_count.reserve(mesh.triangles.size() * 3);
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      ++edge_count[edge_key(tri[e], tri[(e + 1) % 3])];
    }
  }
  for (const auto& [key, count] : edge_count) {
    if (count != 2) return false;
  }
  return true;
}

bool is_consistently_oriented(const TriangleMesh& mesh) {
  check_indices(mesh);
  std::unordered_map<std::uint64_t, int> directed;
  directed.reserve(mesh.triangles.size() * 3);
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e];
      const int b = tri[(e + 1) % 3];
      const std::uint64_t key =
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
          static_cast<std::uint32_t>(b);
      if (++directed[key] > 1) return false;
    }
  }
  return true;
}

double mesh_volume(const TriangleMesh& mesh) {
  if (!is_watertight(mesh) || !is_consistently_oriented(mesh)) {
    throw InvalidArgument("mesh_volume: mesh is not a closed oriented surface");
  }
  double volume6 = 0.0;
  for (const auto& tri : mesh.triangles) {
    const auto& a = mesh.vertices[static_cast<std::size_t>(tri[0])];
    const auto& b = mesh.vertices[static_cast<std::size_t>(tri[1])];
    const auto& c = mesh.vertices[static_cast<std::size_t>(tri[2])];
    volume6 += dot(a, cross(b, c));
  }
  return volume6 / 6.0;
}

double surface_area(const TriangleMesh& mesh) {
  check_indices(mesh);
  double area2 = 0.0;
  for (const auto& tri : mesh.triangles) {
    const auto& a = mesh.vertices[static_cast<std::size_t>(tri[0])];
    const auto& b = mesh.vertices[static_cast<std::size_t>(tri[1])];
    const auto& c = mesh.vertices[static_cast<std::size_t>(tri[2])];
    const auto n = cross(sub(b, a), sub(c, a));
    area2 += std::sqrt(dot(n, n));
  }
  return area2 / 2.0;
}

int connected_components(const TriangleMesh& mesh) {
  check_indices(mesh);
  const int n = static_cast<int>(mesh.vertices.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::vector<char> referenced(static_cast<std::size_t>(n), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& tri : mesh.triangles) {
    for (int idx : tri) referenced[static_cast<std::size_t>(idx)] = 1;
    parent[static_cast<std::size_t>(find(tri[1]))] = find(tri[0]);
    parent[static_cast<std::size_t>(find(tri[2]))] = find(tri[0]);
  }
  int components = 0;
  for (int i = 0; i < n; ++i) {
    if (referenced[static_cast<std::size_t>(i)] && find(i) == i) ++components;
  }
  return components;
}

TriangleMesh cleaned(const TriangleMesh& mesh) {
  check_indices(mesh);
  TriangleMesh out;
  std::vector<int> remap(mesh.vertices.size(), -1);
  for (const auto& tri : mesh.triangles) {
    const auto& a = mesh.vertices[static_cast<std::size_t>(tri[0])];
    const auto& b = mesh.vertices[static_cast<std::size_t>(tri[1])];
    const auto& c = mesh.vertices[static_cast<std::size_t>(tri[2])];
    const auto n = cross(sub(b, a), sub(c, a));
    if (dot(n, n) == 0.0) continue;
    std::array<int, 3> mapped{};
    for (int e = 0; e < 3; ++e) {
      int& slot = remap[static_cast<std::size_t>(tri[e])];
      if (slot < 0) {
        slot = static_cast<int>(out.vertices.size());
        out.vertices.push_back(mesh.vertices[static_cast<std::size_t>(tri[e])]);
      }
      mapped[static_cast<std::size_t>(e)] = slot;
    }
    out.triangles.push_back(mapped);
  }
  return out;
}

TriangleMesh translated(const TriangleMesh& mesh,
                        const std::array<double, 3>& offset) {
  TriangleMesh out = mesh;
  for (auto& v : out.vertices) {
    v[0] += offset[0];
    v[1] += offset[1];
    v[2] += offset[2];
  }
  return out;
}

TriangleMesh scaled(const TriangleMesh& mesh,
                    const std::array<double, 3>& factors) {
  TriangleMesh out = mesh;
  for (auto& v : out.vertices) {
    v[0] *= factors[0];
    v[1] *= factors[1];
    v[2] *= factors[2];
  }
  return out;
}

TriangleMesh rotated_z(const TriangleMesh& mesh, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  TriangleMesh out = mesh;
  for (auto& v : out.vertices) {
    const double x = v[0] * c - v[1] * s;
    const double y = v[0] * s + v[1] * c;
    v[0] = x;
    v[1] = y;
  }
  return out;
}

std::array<double, 3> min_corner(const TriangleMesh& mesh) {
  std::array<double, 3> lo{std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity()};
  for (const auto& v : mesh.vertices) {
    for (int i = 0; i < 3; ++i) {
      lo[static_cast<std::size_t>(i)] =
          std::min(lo[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
    }
  }
  return lo;
}

std::array<double, 3> max_corner(const TriangleMesh& mesh) {
  std::array<double, 3> hi{-std::numeric_limits<double>::infinity(),
                           -std::numeric_limits<double>::infinity(),
                           -std::numeric_limits<double>::infinity()};
  for (const auto& v : mesh.vertices) {
    for (int i = 0; i < 3; ++i) {
      hi[static_cast<std::size_t>(i)] =
          std::max(hi[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
    }
  }
  return hi;
}

double footprint_circumradius(const TriangleMesh& mesh) {
  double r2 = 0.0;
  for (const auto& v : mesh.vertices) {
    r2 = std::max(r2, v[0] * v[0] + v[1] * v[1]);
  }
  return std::sqrt(r2);
}

std::string to_obj(const TriangleMesh& mesh) {
  check_indices(mesh);
  std::ostringstream out;
  out.precision(9);
  for (const auto& v : mesh.vertices) {
    out << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
  }
  for (const auto& tri : mesh.triangles) {
    out << "f " << tri[0] + 1 << " " << tri[1] + 1 << " " << tri[2] + 1
        << "\n";
  }
  return out.str();
}

TriangleMesh from_obj(const std::string& text) {
  TriangleMesh mesh;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "v") {
      std::array<double, 3> v{};
      if (!(fields >> v[0] >> v[1] >> v[2])) {
        throw InvalidArgument("from_obj: malformed vertex at line " +
                              std::to_string(line_no));
      }
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> tri{};
      std::string corner;
      for (int i = 0; i < 3; ++i) {
        if (!(fields >> corner)) {
          throw InvalidArgument("from_obj: malformed face at line " +
                                std::to_string(line_no));
        }
        // Tolerate v/vt/vn face syntax; only the vertex index is kept.
        const std::size_t slash = corner.find('/');
        if (slash != std::string::npos) corner.resize(slash);
        int idx = 0;
        try {
          idx = std::stoi(corner);
        } catch (const std::exception&) {
          throw InvalidArgument("from_obj: malformed face index at line " +
                                std::to_string(line_no));
        }
        if (idx < 1 || idx > static_cast<int>(mesh.vertices.size())) {
          throw InvalidArgument("from_obj: face index out of range at line " +
                                std::to_string(line_no));
        }
        tri[static_cast<std::size_t>(i)] = idx - 1;
      }
      std::string extra;
      if (fields >> extra) {
        throw InvalidArgument("from_obj: non-triangular face at line " +
                              std::to_string(line_no));
      }
      mesh.triangles.push_back(tri);
    }
    // Other record types (comments, normals, groups) are ignored.
  }
  return mesh;
}

}  // namespace percept
