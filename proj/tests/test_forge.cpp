#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "percept/core/error.hpp"
#include "percept/core/rng.hpp"
#include "percept/forge/binary_image.hpp"
#include "percept/forge/digit_mesh.hpp"
#include "percept/forge/extrude.hpp"
#include "percept/forge/marching_cubes.hpp"
#include "percept/forge/mesh.hpp"
#include "percept/forge/occupancy.hpp"
#include "percept/forge/smooth.hpp"
#include "percept/forge/splits.hpp"
#include "percept/forge/starstruck.hpp"
#include "percept/forge/toolbox.hpp"

namespace {

using namespace percept;

BinaryImage random_bitmap(int width, int height, double fill,
                          std::uint64_t seed) {
  BinaryImage img = BinaryImage::filled(width, height, false);
  Rng rng(seed);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (rng.uniform(0.0, 1.0) < fill) img.set(x, y, true);
    }
  }
  return img;
}

// Reference erosion: direct min filter over the k-by-k neighborhood.
BinaryImage erode_reference(const BinaryImage& img, int k) {
  const int r = k / 2;
  BinaryImage out = BinaryImage::filled(img.width, img.height, false);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      bool keep = true;
      for (int dy = -r; dy <= r && keep; ++dy) {
        for (int dx = -r; dx <= r && keep; ++dx) {
          const int nx = x + dx;
          const int ny = y + dy;
          if (!img.in_bounds(nx, ny) || !img.at(nx, ny)) keep = false;
        }
      }
      out.set(x, y, keep);
    }
  }
  return out;
}

bool subset_of(const BinaryImage& inner, const BinaryImage& outer) {
  for (int y = 0; y < inner.height; ++y) {
    for (int x = 0; x < inner.width; ++x) {
      if (inner.at(x, y) && !outer.at(x, y)) return false;
    }
  }
  return true;
}

Polygon2 unit_square() {
  return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
}

// Icosphere built here from first principles as a volume reference.
TriangleMesh reference_icosphere(double radius, int subdivisions) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> verts = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  auto normalize = [radius](std::array<double, 3> v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return std::array<double, 3>{radius * v[0] / n, radius * v[1] / n,
                                 radius * v[2] / n};
  };
  for (auto& v : verts) v = normalize(v);
  for (int pass = 0; pass < subdivisions; ++pass) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const auto& va = verts[static_cast<std::size_t>(a)];
      const auto& vb = verts[static_cast<std::size_t>(b)];
      verts.push_back(normalize({(va[0] + vb[0]) / 2.0, (va[1] + vb[1]) / 2.0,
                                 (va[2] + vb[2]) / 2.0}));
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  TriangleMesh mesh;
  mesh.vertices = std::move(verts);
  mesh.triangles = std::move(faces);
  return mesh;
}

bool segments_cross(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
  auto orient = [](const Point2& p, const Point2& q, const Point2& r) {
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
  };
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  return ((o1 > 0.0) != (o2 > 0.0)) && ((o3 > 0.0) != (o4 > 0.0));
}

bool point_in_polygon(const Point2& p, const Polygon2& poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const bool crosses = (poly[i][1] > p[1]) != (poly[j][1] > p[1]);
    if (crosses) {
      const double x = poly[j][0] + (p[1] - poly[j][1]) *
                                        (poly[i][0] - poly[j][0]) /
                                        (poly[i][1] - poly[j][1]);
      if (p[0] < x) inside = !inside;
    }
  }
  return inside;
}

// Outline-level overlap test, independent of any separating-axis logic:
// boundaries crossing or either containing the other's first vertex.
bool outlines_overlap(const Polygon2& a, const Polygon2& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segments_cross(a[i], a[(i + 1) % a.size()], b[j],
                         b[(j + 1) % b.size()])) {
        return true;
      }
    }
  }
  return point_in_polygon(a[0], b) || point_in_polygon(b[0], a);
}

}  // namespace

TEST_CASE("binary_erode identity, shrink, and validation") {
  const BinaryImage img = random_bitmap(32, 32, 0.7, 11);
  CHECK(binary_erode(img, 1) == img);

  BinaryImage full = BinaryImage::filled(5, 5, true);
  const BinaryImage core = binary_erode(full, 3);
  CHECK(core.count() == 9);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) {
      CHECK(core.at(x, y) == (x >= 1 && x <= 3 && y >= 1 && y <= 3));
    }
  }

  CHECK_THROWS_AS(binary_erode(img, 2), InvalidArgument);
  CHECK_THROWS_AS(binary_erode(img, 0), InvalidArgument);
  CHECK_THROWS_AS(binary_erode(img, -3), InvalidArgument);
}

TEST_CASE("binary_erode matches the direct min filter") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BinaryImage img = random_bitmap(64, 64, 0.6, 100 + seed);
    for (int k : {3, 5, 9}) {
      CHECK(binary_erode(img, k) == erode_reference(img, k));
    }
    // Larger kernels only remove ink.
    CHECK(subset_of(binary_erode(img, 5), binary_erode(img, 3)));
    CHECK(subset_of(binary_erode(img, 3), img));
  }
}

TEST_CASE("pbm text round trips bitmaps") {
  const BinaryImage img = random_bitmap(23, 17, 0.5, 77);
  const std::string text = to_pbm(img);
  CHECK(text.rfind("P1", 0) == 0);
  CHECK(from_pbm(text) == img);
  CHECK_THROWS_AS(from_pbm("P5 2 2 0110"), InvalidArgument);
}

TEST_CASE("build_occupancy mirrors erosion layers around the waist") {
  const BinaryImage img = random_bitmap(24, 24, 0.75, 3);
  const OccupancyGrid3D flat = build_occupancy(img, {1});
  REQUIRE(flat.nz == 2);
  REQUIRE(flat.nx == 24);
  REQUIRE(flat.ny == 24);
  for (int y = 0; y < 24; ++y) {
    for (int x = 0; x < 24; ++x) {
      CHECK(flat.at(x, y, 0) == img.at(x, y));
      CHECK(flat.at(x, y, 1) == img.at(x, y));
    }
  }

  const OccupancyGrid3D stack = build_occupancy(img, {1, 3, 5});
  REQUIRE(stack.nz == 6);
  const BinaryImage e3 = binary_erode(img, 3);
  const BinaryImage e5 = binary_erode(img, 5);
  for (int y = 0; y < 24; ++y) {
    for (int x = 0; x < 24; ++x) {
      // Most eroded outermost, raw image at the waist, mirror symmetric.
      CHECK(stack.at(x, y, 0) == e5.at(x, y));
      CHECK(stack.at(x, y, 1) == e3.at(x, y));
      CHECK(stack.at(x, y, 2) == img.at(x, y));
      for (int z = 0; z < 3; ++z) {
        CHECK(stack.at(x, y, z) == stack.at(x, y, 5 - z));
      }
    }
  }

  CHECK_THROWS_AS(build_occupancy(img, {2}), InvalidArgument);
  CHECK_THROWS_AS(build_occupancy(img, {3, 1}), InvalidArgument);
  CHECK_THROWS_AS(build_occupancy(img, {}), InvalidArgument);
}

TEST_CASE("marching_cubes closes empty and single-voxel grids") {
  CHECK(marching_cubes(OccupancyGrid3D::empty(4, 4, 4)).empty());

  OccupancyGrid3D lone = OccupancyGrid3D::empty(1, 1, 1);
  lone.set(0, 0, 0, true);
  const TriangleMesh octa = marching_cubes(lone);
  CHECK(octa.triangles.size() == 8);
  CHECK(is_watertight(octa));
  CHECK(is_consistently_oriented(octa));
  CHECK(mesh_volume(octa) > 0.0);
  CHECK(mesh_volume(octa) < 1.0);
  CHECK(connected_components(octa) == 1);
}

TEST_CASE("marching_cubes yields watertight oriented surfaces") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OccupancyGrid3D grid = OccupancyGrid3D::empty(8, 8, 8);
    Rng rng(900 + seed);
    for (int z = 0; z < 8; ++z) {
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          if (rng.uniform(0.0, 1.0) < 0.5) grid.set(x, y, z, true);
        }
      }
    }
    const TriangleMesh mesh = marching_cubes(grid);
    CHECK(is_watertight(mesh));
    CHECK(is_consistently_oriented(mesh));
    if (!mesh.empty()) CHECK(mesh_volume(mesh) > 0.0);
  }
}

TEST_CASE("marching_cubes recovers a solid block's volume") {
  OccupancyGrid3D grid = OccupancyGrid3D::empty(10, 10, 10);
  for (int z = 2; z < 8; ++z) {
    for (int y = 2; y < 8; ++y) {
      for (int x = 2; x < 8; ++x) grid.set(x, y, z, true);
    }
  }
  const TriangleMesh mesh = marching_cubes(grid);
  CHECK(is_watertight(mesh));
  const double volume = mesh_volume(mesh);
  CHECK(volume == doctest::Approx(216.0).epsilon(0.10));
}

TEST_CASE("smooth_mesh keeps connectivity and closure") {
  OccupancyGrid3D grid = OccupancyGrid3D::empty(6, 6, 6);
  for (int z = 1; z < 5; ++z) {
    for (int y = 1; y < 5; ++y) {
      for (int x = 1; x < 5; ++x) grid.set(x, y, z, true);
    }
  }
  const TriangleMesh mesh = marching_cubes(grid);

  const TriangleMesh untouched = smooth_mesh(mesh, 0);
  REQUIRE(untouched.vertices.size() == mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    CHECK(untouched.vertices[i] == mesh.vertices[i]);
  }

  const TriangleMesh smoothed = smooth_mesh(mesh, 10, 0.5);
  CHECK(smoothed.vertices.size() == mesh.vertices.size());
  CHECK(smoothed.triangles.size() == mesh.triangles.size());
  CHECK(is_watertight(smoothed));
  CHECK(is_consistently_oriented(smoothed));
  // Smoothing a convex-ish blob only pulls the surface inward.
  CHECK(surface_area(smoothed) <= surface_area(mesh));
  CHECK(mesh_volume(smoothed) <= mesh_volume(mesh));
  CHECK(mesh_volume(smoothed) > 0.0);

  CHECK_THROWS_AS(smooth_mesh(mesh, -1), InvalidArgument);
}

TEST_CASE("mesh_volume on boxes, spheres, and bad meshes") {
  const TriangleMesh cube = extrude_polygon(unit_square(), 1.0);
  CHECK(mesh_volume(cube) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(surface_area(cube) == doctest::Approx(6.0).epsilon(1e-12));

  const Polygon2 rect = {{0.0, 0.0}, {2.0, 0.0}, {2.0, 3.0}, {0.0, 3.0}};
  CHECK(mesh_volume(extrude_polygon(rect, 4.0)) ==
        doctest::Approx(24.0).epsilon(1e-12));

  const TriangleMesh ball = reference_icosphere(10.0, 3);
  const double analytic = 4.0 / 3.0 * 3.14159265358979323846 * 1000.0;
  CHECK(is_watertight(ball));
  CHECK(mesh_volume(ball) == doctest::Approx(analytic).epsilon(0.02));
  CHECK(mesh_volume(ball) < analytic);

  TriangleMesh open_patch;
  open_patch.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  open_patch.triangles = {{0, 1, 2}};
  CHECK_FALSE(is_watertight(open_patch));
  CHECK_THROWS_AS(mesh_volume(open_patch), InvalidArgument);
}

TEST_CASE("mesh transforms and bounds behave") {
  const TriangleMesh cube = extrude_polygon(unit_square(), 1.0);
  const TriangleMesh moved = translated(cube, {10.0, -2.0, 1.0});
  CHECK(min_corner(moved) == std::array<double, 3>{10.0, -2.0, 1.0});
  CHECK(max_corner(moved) == std::array<double, 3>{11.0, -1.0, 2.0});

  const TriangleMesh doubled = scaled(cube, {2.0, 3.0, 4.0});
  CHECK(mesh_volume(doubled) == doctest::Approx(24.0).epsilon(1e-12));

  // Quarter turn about z maps the unit square footprint to [-1,0]x[0,1].
  const TriangleMesh turned = rotated_z(cube, 3.14159265358979323846 / 2.0);
  CHECK(min_corner(turned)[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(max_corner(turned)[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(max_corner(turned)[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mesh_volume(turned) == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(footprint_circumradius(cube) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("cleaned drops degenerate triangles and orphan vertices") {
  TriangleMesh mesh;
  mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 5, 5}, {2, 2, 2}};
  mesh.triangles = {{0, 1, 2}, {0, 1, 1}};
  const TriangleMesh tidy = cleaned(mesh);
  CHECK(tidy.triangles.size() == 1);
  CHECK(tidy.vertices.size() == 3);
}

TEST_CASE("obj text round trips meshes") {
  const TriangleMesh mesh = reference_icosphere(3.0, 1);
  const TriangleMesh loaded = from_obj(to_obj(mesh));
  REQUIRE(loaded.vertices.size() == mesh.vertices.size());
  REQUIRE(loaded.triangles.size() == mesh.triangles.size());
  for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
    CHECK(loaded.triangles[i] == mesh.triangles[i]);
  }
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    for (int a = 0; a < 3; ++a) {
      CHECK(loaded.vertices[i][static_cast<std::size_t>(a)] ==
            doctest::Approx(mesh.vertices[i][static_cast<std::size_t>(a)])
                .epsilon(1e-7));
    }
  }
  CHECK_THROWS_AS(from_obj("v 1 2\nf 1 2 3\n"), InvalidArgument);
}

TEST_CASE("polygon primitives: area, simplicity, triangulation") {
  CHECK(polygon_area(unit_square()) == doctest::Approx(1.0).epsilon(1e-12));
  Polygon2 clockwise = unit_square();
  std::reverse(clockwise.begin(), clockwise.end());
  CHECK(polygon_area(clockwise) == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK(is_simple_polygon(unit_square()));
  const Polygon2 bowtie = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_FALSE(is_simple_polygon(bowtie));

  const auto square_tris = triangulate_polygon(unit_square());
  CHECK(square_tris.size() == 2);

  // An L-shape triangulates into n - 2 counter-clockwise triangles whose
  // areas sum to the polygon area.
  const Polygon2 ell = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  const auto tris = triangulate_polygon(ell);
  REQUIRE(tris.size() == ell.size() - 2);
  double total = 0.0;
  for (const auto& t : tris) {
    const Polygon2 tri = {ell[static_cast<std::size_t>(t[0])],
                          ell[static_cast<std::size_t>(t[1])],
                          ell[static_cast<std::size_t>(t[2])]};
    const double area = polygon_area(tri);
    CHECK(area > 0.0);
    total += area;
  }
  CHECK(total == doctest::Approx(polygon_area(ell)).epsilon(1e-12));
}

TEST_CASE("extrude_polygon builds watertight prisms") {
  const TriangleMesh tri_prism =
      extrude_polygon({{0, 0}, {4, 0}, {0, 3}}, 2.0);
  CHECK(tri_prism.triangles.size() == 8);
  CHECK(is_watertight(tri_prism));
  CHECK(is_consistently_oriented(tri_prism));
  CHECK(mesh_volume(tri_prism) == doctest::Approx(12.0).epsilon(1e-12));

  // Star prism: volume is the shoelace area times the height.
  const Polygon2 star = shape_outline(ShapeKind::kStar);
  const TriangleMesh star_prism = extrude_polygon(star, 4.0);
  CHECK(is_watertight(star_prism));
  CHECK(mesh_volume(star_prism) ==
        doctest::Approx(polygon_area(star) * 4.0).epsilon(1e-9));

  // Winding of the input loop does not flip the solid inside-out.
  Polygon2 clockwise = unit_square();
  std::reverse(clockwise.begin(), clockwise.end());
  CHECK(mesh_volume(extrude_polygon(clockwise, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(extrude_polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, 1.0),
                  InvalidArgument);
  CHECK_THROWS_AS(extrude_polygon(unit_square(), 0.0), InvalidArgument);
}

TEST_CASE("shape outlines have the advertised geometry") {
  const Polygon2 star = shape_outline(ShapeKind::kStar);
  const Polygon2 circle = shape_outline(ShapeKind::kCircle);
  const Polygon2 square = shape_outline(ShapeKind::kSquare);
  CHECK(star.size() == 10);
  CHECK(circle.size() == kCircleSegments);
  CHECK(square.size() == 4);
  CHECK(polygon_area(star) > 0.0);
  CHECK(polygon_area(circle) > 0.0);
  CHECK(polygon_area(square) == doctest::Approx(400.0).epsilon(1e-9));
  CHECK(shape_circumradius(ShapeKind::kStar) ==
        doctest::Approx(kStarOuterRadiusMm).epsilon(1e-12));
  CHECK(shape_circumradius(ShapeKind::kCircle) ==
        doctest::Approx(kCircleRadiusMm).epsilon(1e-12));
  CHECK(shape_circumradius(ShapeKind::kSquare) ==
        doctest::Approx(kSquareSideMm * std::sqrt(0.5)).epsilon(1e-12));
  // The inner ring of the star sits at the inner radius.
  double min_r = 1e9;
  for (const auto& p : star) min_r = std::min(min_r, std::hypot(p[0], p[1]));
  CHECK(min_r == doctest::Approx(kStarInnerRadiusMm).epsilon(1e-9));

  for (ShapeKind kind :
       {ShapeKind::kStar, ShapeKind::kCircle, ShapeKind::kSquare}) {
    const auto parts = shape_convex_parts(kind);
    CHECK_FALSE(parts.empty());
    for (const auto& part : parts) {
      REQUIRE(part.size() >= 3);
      // Convexity: every corner turns the same way.
      for (std::size_t i = 0; i < part.size(); ++i) {
        const auto& a = part[i];
        const auto& b = part[(i + 1) % part.size()];
        const auto& c = part[(i + 2) % part.size()];
        const double cross =
            (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        CHECK(cross >= -1e-9);
      }
    }
    CHECK(shape_from_name(shape_name(kind)) == kind);
  }
  CHECK_THROWS_AS(shape_from_name("pentagon"), InvalidArgument);
}

TEST_CASE("convex overlap tests count touching as disjoint") {
  const Polygon2 a = unit_square();
  Polygon2 shifted = a;
  for (auto& p : shifted) p[0] += 1.0;  // shares the x = 1 edge
  CHECK_FALSE(convex_polygons_overlap(a, shifted));
  for (auto& p : shifted) p[0] -= 0.5;
  CHECK(convex_polygons_overlap(a, shifted));
  Polygon2 inside = {{0.4, 0.4}, {0.6, 0.4}, {0.6, 0.6}, {0.4, 0.6}};
  CHECK(convex_polygons_overlap(a, inside));

  SceneItem left{ShapeKind::kStar, -20.0, 0.0, 0.3};
  SceneItem right{ShapeKind::kStar, 20.0, 0.0, 1.2};
  CHECK_FALSE(items_overlap(left, right));
  SceneItem close{ShapeKind::kStar, -15.0, 3.0, 2.0};
  CHECK(items_overlap(left, close));
}

TEST_CASE("generate_starstruck_scene obeys counts, bounds, and spacing") {
  CHECK(to_manifest(generate_starstruck_scene(12)) ==
        to_manifest(generate_starstruck_scene(12)));
  std::array<int, 4> star_histogram = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SceneLayout scene = generate_starstruck_scene(seed);
    REQUIRE(scene.star_count >= 1);
    REQUIRE(scene.star_count <= 3);
    star_histogram[static_cast<std::size_t>(scene.star_count)]++;
    REQUIRE(static_cast<int>(scene.items.size()) >= scene.star_count);
    CHECK(static_cast<int>(scene.items.size()) <= scene.star_count + 5);
    std::vector<Polygon2> outlines;
    for (std::size_t i = 0; i < scene.items.size(); ++i) {
      const SceneItem& item = scene.items[i];
      const bool is_star = item.shape == ShapeKind::kStar;
      CHECK(is_star == (static_cast<int>(i) < scene.star_count));
      const Polygon2 outline = transformed_outline(item);
      for (const auto& p : outline) {
        CHECK(std::abs(p[0]) <= kPlatformSideMm / 2.0 + 1e-9);
        CHECK(std::abs(p[1]) <= kPlatformSideMm / 2.0 + 1e-9);
      }
      outlines.push_back(outline);
    }
    for (std::size_t i = 0; i < outlines.size(); ++i) {
      for (std::size_t j = i + 1; j < outlines.size(); ++j) {
        CHECK_FALSE(outlines_overlap(outlines[i], outlines[j]));
      }
    }
  }
  // Seed residues cycle the class, so any sixty-seed prefix splits evenly.
  CHECK(star_histogram[1] == 20);
  CHECK(star_histogram[2] == 20);
  CHECK(star_histogram[3] == 20);
}

TEST_CASE("starstruck manifests round trip layouts exactly") {
  const SceneLayout scene = generate_starstruck_scene(321);
  const SceneLayout loaded = from_manifest(to_manifest(scene));
  REQUIRE(loaded.items.size() == scene.items.size());
  CHECK(loaded.star_count == scene.star_count);
  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    CHECK(loaded.items[i].shape == scene.items[i].shape);
    CHECK(loaded.items[i].x == scene.items[i].x);
    CHECK(loaded.items[i].y == scene.items[i].y);
    CHECK(loaded.items[i].theta == scene.items[i].theta);
  }
  CHECK_THROWS_AS(from_manifest("blob 1 2 3\n"), InvalidArgument);
}

TEST_CASE("toolbox tools are watertight scaled variants") {
  REQUIRE(kToolboxVariantCount == 4);
  const TriangleMesh base = toolbox_tool_mesh(0);
  CHECK(is_watertight(base));
  CHECK(is_consistently_oriented(base));
  const double base_volume = mesh_volume(base);
  CHECK(base_volume > 0.0);
  const auto base_max = max_corner(base);
  const auto base_min = min_corner(base);
  CHECK(base_max[2] - base_min[2] == doctest::Approx(kToolHeightMm).epsilon(1e-9));
  for (int variant = 1; variant < kToolboxVariantCount; ++variant) {
    const TriangleMesh mesh = toolbox_tool_mesh(variant);
    CHECK(is_watertight(mesh));
    const double scale = toolbox_variant_scale(variant);
    // Heights are shared; footprints scale in both planar axes.
    CHECK(mesh_volume(mesh) ==
          doctest::Approx(base_volume * scale * scale).epsilon(1e-6));
    CHECK(footprint_circumradius(mesh) ==
          doctest::Approx(footprint_circumradius(base) * scale).epsilon(1e-6));
  }
  CHECK_THROWS_AS(toolbox_tool_mesh(4), InvalidArgument);
  CHECK_THROWS_AS(toolbox_tool_mesh(-1), InvalidArgument);
}

TEST_CASE("split_mnist3d fills every quota deterministically") {
  std::vector<int> labels(static_cast<std::size_t>(kMnist3dTotal));
  for (int i = 0; i < kMnist3dTotal; ++i) {
    labels[static_cast<std::size_t>(i)] = i / kMnist3dPerClass;
  }
  const auto assignment = split_mnist3d(labels, 5);
  REQUIRE(assignment.size() == labels.size());
  std::map<std::pair<int, Mnist3dSplit>, int> counts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    counts[{labels[i], assignment[i]}]++;
  }
  for (int digit = 0; digit < kMnist3dClassCount; ++digit) {
    CHECK(counts[{digit, Mnist3dSplit::kTrain}] == kMnist3dPerClassTrain);
    CHECK(counts[{digit, Mnist3dSplit::kTest}] == kMnist3dPerClassTest);
    CHECK(counts[{digit, Mnist3dSplit::kHoldout}] == kMnist3dPerClassHoldout);
    CHECK(counts[{digit, Mnist3dSplit::kPrintedTrain}] ==
          kMnist3dPerClassPrintedTrain);
    CHECK(counts[{digit, Mnist3dSplit::kPrintedTest}] ==
          kMnist3dPerClassPrintedTest);
  }
  CHECK(split_mnist3d(labels, 5) == assignment);
  CHECK_FALSE(split_mnist3d(labels, 6) == assignment);

  std::vector<int> short_labels = labels;
  short_labels.pop_back();
  CHECK_THROWS_AS(split_mnist3d(short_labels, 5), InvalidArgument);
}

TEST_CASE("split manifests and names round trip") {
  for (Mnist3dSplit split :
       {Mnist3dSplit::kTrain, Mnist3dSplit::kTest, Mnist3dSplit::kHoldout,
        Mnist3dSplit::kPrintedTrain, Mnist3dSplit::kPrintedTest}) {
    CHECK(split_from_name(split_name(split)) == split);
  }
  CHECK_THROWS_AS(split_from_name("validation"), InvalidArgument);

  std::vector<int> labels(static_cast<std::size_t>(kMnist3dTotal));
  for (int i = 0; i < kMnist3dTotal; ++i) {
    labels[static_cast<std::size_t>(i)] = i / kMnist3dPerClass;
  }
  const auto assignment = split_mnist3d(labels, 0);
  const std::string manifest = to_split_manifest(labels, assignment);
  std::vector<int> loaded_labels;
  std::vector<Mnist3dSplit> loaded_assignment;
  from_split_manifest(manifest, loaded_labels, loaded_assignment);
  CHECK(loaded_labels == labels);
  CHECK(loaded_assignment == assignment);
}

TEST_CASE("synth_digit_bitmap draws deterministic 500x500 glyphs") {
  const BinaryImage a = synth_digit_bitmap(3, 9);
  const BinaryImage b = synth_digit_bitmap(3, 9);
  CHECK(a == b);
  CHECK(a.width == kDigitImageSize);
  CHECK(a.height == kDigitImageSize);
  CHECK(a.count() > 1000);
  CHECK(a.count() < kDigitImageSize * kDigitImageSize / 2);
  CHECK_FALSE(synth_digit_bitmap(3, 10) == a);
  CHECK_FALSE(synth_digit_bitmap(4, 9) == a);
  CHECK_THROWS_AS(synth_digit_bitmap(10, 0), InvalidArgument);
}

TEST_CASE("grayscale_to_digit_bitmap upsamples and binarizes") {
  // Bright top half, dark bottom half.
  const std::vector<float> tiny = {1.0f, 1.0f, 0.0f, 0.0f};
  const BinaryImage img = grayscale_to_digit_bitmap(tiny, 2, 2);
  REQUIRE(img.width == kDigitImageSize);
  REQUIRE(img.height == kDigitImageSize);
  for (int x = 0; x < kDigitImageSize; x += 7) {
    CHECK(img.at(x, 0));
    CHECK_FALSE(img.at(x, kDigitImageSize - 1));
  }
  const int ink = img.count();
  CHECK(ink > kDigitImageSize * kDigitImageSize / 4);
  CHECK(ink < 3 * kDigitImageSize * kDigitImageSize / 4);
  CHECK_THROWS_AS(grayscale_to_digit_bitmap(tiny, 3, 2), InvalidArgument);
}

TEST_CASE("digit_to_mesh produces printable platform-sized solids") {
  CHECK(digit_kernel_sizes() ==
        std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19});
  for (int digit : {0, 7}) {
    const BinaryImage img = synth_digit_bitmap(digit, 42);
    const TriangleMesh mesh = digit_to_mesh(img);
    CHECK(is_watertight(mesh));
    CHECK(is_consistently_oriented(mesh));
    CHECK(mesh_volume(mesh) > 0.0);
    const auto lo = min_corner(mesh);
    const auto hi = max_corner(mesh);
    CHECK(lo[0] >= -kPlatformSideMm / 2.0);
    CHECK(lo[1] >= -kPlatformSideMm / 2.0);
    CHECK(hi[0] <= kPlatformSideMm / 2.0);
    CHECK(hi[1] <= kPlatformSideMm / 2.0);
    CHECK(std::abs(lo[2]) <= 1e-9);
    CHECK(hi[2] > 1.0);
    CHECK(hi[2] <= 4.0 + 1e-9);
  }
  CHECK_THROWS_AS(digit_to_mesh(BinaryImage::filled(500, 500, false)),
                  InvalidArgument);
  CHECK_THROWS_AS(digit_to_mesh(BinaryImage::filled(100, 100, true)),
                  InvalidArgument);
}
