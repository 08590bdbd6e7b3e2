// Acceptance checklist for the benchmark suite: twelve independently
// verifiable claims about the runtime, the procedural generators, the
// renderers, the agents, and the wire protocol. Each criterion prints one
// PASS/FAIL line; the process exits nonzero if any of them fail. Tolerances
// are pinned next to the checks they guard.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "percept/core/env.hpp"
#include "percept/core/error.hpp"
#include "percept/core/ops.hpp"
#include "percept/core/rng.hpp"
#include "percept/core/task.hpp"
#include "percept/core/tensor.hpp"
#include "percept/forge/binary_image.hpp"
#include "percept/forge/digit_mesh.hpp"
#include "percept/forge/extrude.hpp"
#include "percept/forge/marching_cubes.hpp"
#include "percept/forge/mesh.hpp"
#include "percept/forge/occupancy.hpp"
#include "percept/glimpse/circle_square.hpp"
#include "percept/harness/agents.hpp"
#include "percept/harness/constants.hpp"
#include "percept/harness/episode.hpp"
#include "percept/harness/metrics.hpp"
#include "percept/harness/protocol.hpp"
#include "percept/harness/registry.hpp"
#include "percept/harness/runner.hpp"
#include "percept/loc/grid_map.hpp"
#include "percept/loc/map_gen.hpp"
#include "percept/loc/raycast.hpp"
#include "percept/tactile/depth_render.hpp"

namespace {

using namespace percept;

// Pinned tolerances, one per claim that is not checked bit-exactly.
constexpr double kRewardDecompositionTol = 1e-9;   // |reward - identity| bound
constexpr double kRaycastAgreementCells = 0.5;     // DDA vs fine march
constexpr double kRaycastMarchStep = 1e-3;         // fine-march granularity
constexpr double kBlockVolumeRelTol = 0.10;        // voxel block vs mesh volume
constexpr double kSphereVolumeRelTol = 0.02;       // icosphere vs analytic
constexpr double kDepthRenderTolMm = 1e-6;         // renderer vs closed form
constexpr double kOracleRoundTripTol = 1e-5;       // float32 target round trip
constexpr double kRandomTactileAccuracyCeiling = 0.25;
constexpr int kLightDarkWinsRequired = 95;         // out of 100 seeds
constexpr int kClimberReachesRequired = 90;        // out of 100 seeds

class Check {
 public:
  void expect(bool pass, const std::string& what) {
    ++total_;
    if (!pass) {
      ++failures_;
      if (detail_.empty()) detail_ = what;
    }
  }
  void merge(const Check& other) {
    total_ += other.total_;
    failures_ += other.failures_;
    if (detail_.empty()) detail_ = other.detail_;
  }
  bool ok() const { return failures_ == 0; }
  int total() const { return total_; }
  int failures() const { return failures_; }
  const std::string& detail() const { return detail_; }

 private:
  int total_ = 0;
  int failures_ = 0;
  std::string detail_;
};

// Runs `count` independent jobs on a small thread pool and merges their
// check results; exceptions inside a job are recorded as failures.
void parallel_tasks(std::size_t count,
                    const std::function<void(std::size_t, Check&)>& fn,
                    Check& check) {
  std::vector<Check> results(count);
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t lanes =
      std::min<std::size_t>(count, std::max(2u, hw == 0 ? 4u : hw));
  std::vector<std::thread> pool;
  pool.reserve(lanes);
  for (std::size_t t = 0; t < lanes; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i, results[i]);
        } catch (const std::exception& e) {
          results[i].expect(false, std::string("exception: ") + e.what());
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const Check& r : results) check.merge(r);
}

double find_metric(const std::vector<std::pair<std::string, double>>& metrics,
                   const std::string& key, bool* found = nullptr) {
  for (const auto& [name, value] : metrics) {
    if (name == key) {
      if (found) *found = true;
      return value;
    }
  }
  if (found) *found = false;
  return 0.0;
}

// ---------------------------------------------------------------------------
// 1. Reward decomposition: on random raw actions in every environment,
//    reward == bonus - 1e-3 * ||base|| - loss, with the norm taken on the
//    action as submitted (before any clipping).

void criterion_reward_decomposition(Check& check) {
  const std::vector<std::string> ids = environment_ids();
  const int per_env =
      static_cast<int>((1000 + ids.size() - 1) / ids.size());
  std::atomic<int> steps_checked{0};
  parallel_tasks(
      ids.size(),
      [&](std::size_t i, Check& c) {
        const std::string& id = ids[i];
        auto env = make_env({id, "train", ""});
        const TaskSpec spec = env->spec();
        Rng rng(9000 + i);
        std::uint64_t episode_seed = 100;
        env->reset(episode_seed);
        for (int step = 0; step < per_env; ++step) {
          if (env->episode_done()) env->reset(++episode_seed);
          Action a;
          for (int d = 0; d < spec.base_action_dim; ++d) {
            a.base.push_back(static_cast<float>(rng.uniform(-1.5, 1.5)));
          }
          for (int d = 0; d < spec.prediction_space.size; ++d) {
            a.prediction.push_back(static_cast<float>(rng.uniform(-2.0, 2.0)));
          }
          const StepOutcome out = env->step(a);
          double norm_sq = 0.0;
          for (float v : a.base) {
            norm_sq += static_cast<double>(v) * static_cast<double>(v);
          }
          const double expected =
              spec.reward_bonus - 1e-3 * std::sqrt(norm_sq) - out.loss;
          c.expect(std::abs(out.reward - expected) < kRewardDecompositionTol,
                   id + ": reward identity violated (step " +
                       std::to_string(step) + ")");
          ++steps_checked;
        }
      },
      check);
  check.expect(steps_checked >= 1000, "fewer than 1000 steps were exercised");
}

// ---------------------------------------------------------------------------
// 2. Constant fidelity: the machine-readable constants table matches the
//    pinned benchmark numbers exactly, and the live environments agree.

void criterion_constant_fidelity(Check& check) {
  const nlohmann::json t = constants_table();
  const auto eq = [&](const char* key, const nlohmann::json& expected) {
    check.expect(t.contains(key) && t.at(key) == expected,
                 std::string("constants.") + key);
  };

  nlohmann::json limits;
  for (const char* id : {"CircleSquare", "MNIST", "CIFAR10", "TinyImageNet",
                         "CIFAR10Loc", "TinyImageNetLoc", "LightDark",
                         "LIDARLocMaze", "LIDARLocMazeStatic", "LIDARLocRooms",
                         "LIDARLocRoomsStatic", "TactileMNIST"}) {
    limits[id] = 16;
  }
  limits["Starstruck"] = 32;
  limits["Toolbox"] = 64;
  limits["TactileMNISTVolume"] = 32;
  eq("step_limits", limits);

  eq("action_regularization", 1e-3);
  eq("glimpse_move_scale", 0.2);
  eq("glimpse_sizes", nlohmann::json{{"CircleSquare", 5},
                                     {"MNIST", 5},
                                     {"CIFAR10", 5},
                                     {"CIFAR10Loc", 5},
                                     {"TinyImageNet", 10},
                                     {"TinyImageNetLoc", 10}});
  eq("lightdark_move_scale", 0.15);
  eq("lightdark_reward_bonus", 0.1);
  eq("lidar_beam_count", 8);
  eq("maze_size", 21);
  eq("rooms_size", 32);
  eq("gel_thickness_mm", 4.25);
  eq("platform_side_mm", 100.0);
  eq("tactile_image_size", 64);
  eq("sensor_footprint_mm", 14.0);
  eq("workspace_xy_mm", 60.0);
  eq("workspace_z_mm", 30.0);
  eq("sensor_step_scale_mm", nlohmann::json::array({20.0, 20.0, 10.0}));
  eq("volume_ref_mm3", 20000.0);
  eq("digit_image_size", 500);
  eq("digit_mm_per_pixel", 0.2);
  eq("mnist3d_per_class", nlohmann::json{{"train", 1148},
                                         {"test", 100},
                                         {"holdout", 50},
                                         {"printed_train", 50},
                                         {"printed_test", 10}});
  eq("mnist3d_total", 13580);
  eq("circle_square_corpus_size", 1568);
  eq("circle_square_test_size", 256);
  eq("starstruck_corpus_size", 3300);
  eq("starstruck_test_size", 300);

  // The table must agree with the environments as actually built.
  for (const std::string& id : environment_ids()) {
    auto env = make_env({id, "train", ""});
    check.expect(t.at("step_limits").at(id) == env->spec().step_limit,
                 id + ": live step limit disagrees with the table");
    if (id == "LightDark") {
      check.expect(env->spec().reward_bonus == 0.1,
                   "LightDark: live reward bonus is not 0.1");
    } else {
      check.expect(env->spec().reward_bonus == 0.0,
                   id + ": unexpected live reward bonus");
    }
  }
  check.expect(kActionRegularization == 1e-3, "action regularization constant");
  check.expect(kGelThicknessMm == 4.25, "gel thickness constant");
  check.expect(kSensorFootprintMm == 14.0, "sensor footprint constant");
  check.expect(kTactileImageSize == 64, "tactile image size constant");
}

// ---------------------------------------------------------------------------
// 3. Raycast: the analytic grid traversal agrees with a brute-force fine
//    march to better than half a cell on every random ray.

GridMap random_bordered_map(std::uint64_t seed) {
  GridMap map;
  map.cells = BinaryImage::filled(16, 16, false);
  for (int x = 0; x < 16; ++x) {
    map.cells.set(x, 0, true);
    map.cells.set(x, 15, true);
  }
  for (int y = 0; y < 16; ++y) {
    map.cells.set(0, y, true);
    map.cells.set(15, y, true);
  }
  Rng rng(seed);
  for (int y = 1; y < 15; ++y) {
    for (int x = 1; x < 15; ++x) {
      if (rng.uniform(0.0, 1.0) < 0.25) map.cells.set(x, y, true);
    }
  }
  return map;
}

double march_to_obstacle(const GridMap& map, std::array<double, 2> origin,
                         std::array<double, 2> dir, double step) {
  const double limit = 2.0 * std::hypot(static_cast<double>(map.width()),
                                        static_cast<double>(map.height()));
  for (double t = step; t <= limit; t += step) {
    const int cx = static_cast<int>(std::floor(origin[0] + t * dir[0]));
    const int cy = static_cast<int>(std::floor(origin[1] + t * dir[1]));
    if (map.obstacle(cx, cy)) return t;
  }
  return limit;
}

void criterion_raycast(Check& check) {
  int agreed = 0;
  int rays = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GridMap map = random_bordered_map(3000 + seed);
    std::vector<std::pair<int, int>> free;
    for (int y = 0; y < 16; ++y) {
      for (int x = 0; x < 16; ++x) {
        if (map.free_at(x, y)) free.emplace_back(x, y);
      }
    }
    check.expect(!free.empty(), "random map has no free cells");
    if (free.empty()) continue;
    Rng rng(4000 + seed);
    for (int r = 0; r < 80; ++r) {
      const auto [cx, cy] = free[static_cast<std::size_t>(
          rng.uniform_int(static_cast<int>(free.size())))];
      const std::array<double, 2> origin = {cx + rng.uniform(0.1, 0.9),
                                            cy + rng.uniform(0.1, 0.9)};
      const double angle = rng.uniform(0.0, 2.0 * M_PI);
      const std::array<double, 2> dir = {std::cos(angle), std::sin(angle)};
      const double exact = raycast(map, origin, dir);
      const double marched =
          march_to_obstacle(map, origin, dir, kRaycastMarchStep);
      ++rays;
      if (std::abs(exact - marched) < kRaycastAgreementCells) ++agreed;
    }
  }
  check.expect(rays == 8000, "expected 8000 rays");
  check.expect(agreed == rays,
               std::to_string(rays - agreed) + " of " + std::to_string(rays) +
                   " rays disagree with the fine march");
}

// ---------------------------------------------------------------------------
// 4. Map generators: 1000 seeds apiece give closed borders, one connected
//    free region, mazes with no open 2x2 block, and maze adjacency graphs
//    that are exact spanning trees.

bool border_closed(const GridMap& map) {
  for (int x = 0; x < map.width(); ++x) {
    if (map.free_at(x, 0) || map.free_at(x, map.height() - 1)) return false;
  }
  for (int y = 0; y < map.height(); ++y) {
    if (map.free_at(0, y) || map.free_at(map.width() - 1, y)) return false;
  }
  return true;
}

// Returns {free cells, reachable-from-first free cells, undirected edges}.
std::array<int, 3> free_graph_stats(const GridMap& map) {
  int nodes = 0;
  int edges = 0;
  int start_x = -1;
  int start_y = -1;
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      if (!map.free_at(x, y)) continue;
      ++nodes;
      if (start_x < 0) {
        start_x = x;
        start_y = y;
      }
      if (map.free_at(x + 1, y)) ++edges;
      if (map.free_at(x, y + 1)) ++edges;
    }
  }
  int reached = 0;
  if (start_x >= 0) {
    std::vector<std::uint8_t> seen(
        static_cast<std::size_t>(map.width()) * map.height(), 0);
    std::vector<std::pair<int, int>> stack = {{start_x, start_y}};
    seen[static_cast<std::size_t>(start_y) * map.width() + start_x] = 1;
    while (!stack.empty()) {
      const auto [x, y] = stack.back();
      stack.pop_back();
      ++reached;
      const int dx[] = {1, -1, 0, 0};
      const int dy[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int nx = x + dx[k];
        const int ny = y + dy[k];
        if (!map.free_at(nx, ny)) continue;
        std::uint8_t& mark =
            seen[static_cast<std::size_t>(ny) * map.width() + nx];
        if (!mark) {
          mark = 1;
          stack.emplace_back(nx, ny);
        }
      }
    }
  }
  return {nodes, reached, edges};
}

bool has_open_2x2(const GridMap& map) {
  for (int y = 0; y + 1 < map.height(); ++y) {
    for (int x = 0; x + 1 < map.width(); ++x) {
      if (map.free_at(x, y) && map.free_at(x + 1, y) &&
          map.free_at(x, y + 1) && map.free_at(x + 1, y + 1)) {
        return true;
      }
    }
  }
  return false;
}

void criterion_map_generators(Check& check) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GridMap maze = generate_maze(seed);
    const std::string tag = "maze seed " + std::to_string(seed);
    check.expect(maze.width() == 21 && maze.height() == 21, tag + ": size");
    check.expect(border_closed(maze), tag + ": open border");
    const auto [nodes, reached, edges] = free_graph_stats(maze);
    check.expect(nodes > 0 && reached == nodes, tag + ": disconnected");
    check.expect(!has_open_2x2(maze), tag + ": open 2x2 block");
    check.expect(edges == nodes - 1, tag + ": not a spanning tree");
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GridMap rooms = generate_rooms(seed);
    const std::string tag = "rooms seed " + std::to_string(seed);
    check.expect(rooms.width() == 32 && rooms.height() == 32, tag + ": size");
    check.expect(border_closed(rooms), tag + ": open border");
    const auto [nodes, reached, edges] = free_graph_stats(rooms);
    (void)edges;
    check.expect(nodes > 0 && reached == nodes, tag + ": disconnected");
  }
}

// ---------------------------------------------------------------------------
// 5. Mesh pipeline: erosion equals a brute-force min filter, extracted
//    surfaces are closed, and volumes land on their analytic references.

BinaryImage reference_min_filter(const BinaryImage& img, int k) {
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

// Closed oriented surface: every directed edge appears exactly once and is
// matched by its reverse. Checked here from scratch, independent of the
// library's own validators.
bool closed_oriented_surface(const TriangleMesh& mesh) {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = tri[static_cast<std::size_t>(e)];
      const int b = tri[static_cast<std::size_t>((e + 1) % 3)];
      if (a == b) return false;
      if (++directed[{a, b}] > 1) return false;
    }
  }
  for (const auto& [edge, count] : directed) {
    (void)count;
    const auto reverse = directed.find({edge.second, edge.first});
    if (reverse == directed.end() || reverse->second != 1) return false;
  }
  return true;
}

// From-scratch icosphere (icosahedron + midpoint subdivision, vertices
// renormalized to the radius), used as an analytic volume reference.
TriangleMesh build_icosphere(double radius, int subdivisions) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  TriangleMesh mesh;
  const double raw[12][3] = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (const auto& v : raw) {
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    mesh.vertices.push_back(
        {v[0] / len * radius, v[1] / len * radius, v[2] / len * radius});
  }
  mesh.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10},
                    {0, 10, 11}, {1, 5, 9}, {5, 11, 4},  {11, 10, 2},
                    {10, 7, 6},  {7, 1, 8}, {3, 9, 4},   {3, 4, 2},
                    {3, 2, 6},   {3, 6, 8}, {3, 8, 9},   {4, 9, 5},
                    {2, 4, 11},  {6, 2, 10}, {8, 6, 7},  {9, 8, 1}};
  for (int pass = 0; pass < subdivisions; ++pass) {
    std::map<std::pair<int, int>, int> midpoint;
    const auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const auto& va = mesh.vertices[static_cast<std::size_t>(a)];
      const auto& vb = mesh.vertices[static_cast<std::size_t>(b)];
      std::array<double, 3> m = {(va[0] + vb[0]) / 2, (va[1] + vb[1]) / 2,
                                 (va[2] + vb[2]) / 2};
      const double len = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
      for (double& c : m) c = c / len * radius;
      const int index = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(m);
      midpoint.emplace(key, index);
      return index;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(mesh.triangles.size() * 4);
    for (const auto& tri : mesh.triangles) {
      const int ab = mid(tri[0], tri[1]);
      const int bc = mid(tri[1], tri[2]);
      const int ca = mid(tri[2], tri[0]);
      next.push_back({tri[0], ab, ca});
      next.push_back({tri[1], bc, ab});
      next.push_back({tri[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    mesh.triangles = std::move(next);
  }
  return mesh;
}

void criterion_mesh_pipeline(Check& check) {
  // Erosion vs brute-force min filter, exact.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(5000 + seed);
    BinaryImage img = BinaryImage::filled(64, 64, false);
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 64; ++x) {
        img.set(x, y, rng.uniform(0.0, 1.0) < 0.5);
      }
    }
    const int k = 3 + 2 * static_cast<int>(seed % 4);  // 3, 5, 7, 9
    const BinaryImage fast = binary_erode(img, k);
    const BinaryImage slow = reference_min_filter(img, k);
    check.expect(fast.bits == slow.bits,
                 "erosion mismatch at seed " + std::to_string(seed));
  }

  // Random occupancy grids produce closed, consistently wound surfaces.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    OccupancyGrid3D grid = OccupancyGrid3D::empty(8, 8, 8);
    Rng rng(6000 + seed);
    for (int z = 0; z < 8; ++z) {
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          if (rng.uniform(0.0, 1.0) < 0.5) grid.set(x, y, z, true);
        }
      }
    }
    const TriangleMesh mesh = marching_cubes(grid);
    check.expect(closed_oriented_surface(mesh),
                 "open surface from grid seed " + std::to_string(seed));
  }

  // A solid block's extracted volume lands near the voxel count.
  OccupancyGrid3D block = OccupancyGrid3D::empty(10, 10, 10);
  for (int z = 2; z < 8; ++z) {
    for (int y = 2; y < 8; ++y) {
      for (int x = 2; x < 8; ++x) block.set(x, y, z, true);
    }
  }
  const TriangleMesh block_mesh = marching_cubes(block);
  check.expect(closed_oriented_surface(block_mesh), "block surface not closed");
  const double block_volume = mesh_volume(block_mesh);
  check.expect(std::abs(block_volume - 216.0) <= kBlockVolumeRelTol * 216.0,
               "block volume " + std::to_string(block_volume) +
                   " not within 10% of 216");

  // Signed-volume integration lands on the analytic ball volume.
  const TriangleMesh ball = build_icosphere(10.0, 3);
  check.expect(closed_oriented_surface(ball), "icosphere not closed");
  const double analytic = 4.0 / 3.0 * M_PI * 1000.0;
  const double ball_volume = mesh_volume(ball);
  check.expect(std::abs(ball_volume - analytic) <= kSphereVolumeRelTol * analytic,
               "icosphere volume " + std::to_string(ball_volume) +
                   " not within 2% of " + std::to_string(analytic));

  // Digit meshes close up and stay on the 100x100 mm platform.
  for (int i = 0; i < 20; ++i) {
    const int digit = i % 10;
    const BinaryImage bitmap =
        synth_digit_bitmap(digit, 7000 + static_cast<std::uint64_t>(i));
    const TriangleMesh mesh = digit_to_mesh(bitmap);
    const std::string tag = "digit " + std::to_string(digit) + " (case " +
                            std::to_string(i) + ")";
    check.expect(closed_oriented_surface(mesh), tag + ": open surface");
    check.expect(!mesh.triangles.empty(), tag + ": empty mesh");
    double max_abs_xy = 0.0;
    for (const auto& v : mesh.vertices) {
      max_abs_xy = std::max({max_abs_xy, std::abs(v[0]), std::abs(v[1])});
    }
    check.expect(max_abs_xy <= 50.0 + 1e-9,
                 tag + ": exceeds the 100x100 mm footprint");
  }
}

// ---------------------------------------------------------------------------
// 6. Depth renderer: a single rotated box matches the closed form at every
//    pixel; random scenes stay clipped to the gel and only deepen as the
//    sensor lowers.

void criterion_depth_renderer(Check& check) {
  const double w = 20.37;
  const double h = 16.11;
  const double height = 6.0;
  const double ox = 3.1;
  const double oy = -2.7;
  const double theta = 0.37;
  auto mesh = std::make_shared<const TriangleMesh>(
      extrude_polygon({{0.0, 0.0}, {w, 0.0}, {w, h}, {0.0, h}}, height));
  auto bvh = std::make_shared<const DepthBvh>(*mesh);
  const std::vector<ObjectInstance> objects = {
      make_object(mesh, bvh, ox, oy, theta)};

  Rng rng(7100);
  int bad_pixels = 0;
  for (int pose = 0; pose < 20; ++pose) {
    const std::array<double, 3> sensor = {rng.uniform(-20.0, 35.0),
                                          rng.uniform(-25.0, 25.0),
                                          rng.uniform(0.5, 9.5)};
    const std::vector<double> depth = render_depth(objects, sensor);
    const double pixel = kSensorFootprintMm / kTactileImageSize;
    const double half = kSensorFootprintMm / 2.0;
    for (int r = 0; r < kTactileImageSize; ++r) {
      for (int c = 0; c < kTactileImageSize; ++c) {
        const double wx = sensor[0] - half + (c + 0.5) * pixel;
        const double wy = sensor[1] + half - (r + 0.5) * pixel;
        // Into the box frame by the inverse pose.
        const double dx = wx - ox;
        const double dy = wy - oy;
        const double bx = std::cos(theta) * dx + std::sin(theta) * dy;
        const double by = -std::sin(theta) * dx + std::cos(theta) * dy;
        const bool inside = bx >= 0.0 && bx <= w && by >= 0.0 && by <= h;
        const double expected =
            inside ? std::min(std::max(0.0, height - sensor[2]),
                              kGelThicknessMm)
                   : 0.0;
        const double got =
            depth[static_cast<std::size_t>(r) * kTactileImageSize + c];
        if (std::abs(got - expected) > kDepthRenderTolMm) ++bad_pixels;
      }
    }
  }
  check.expect(bad_pixels == 0,
               std::to_string(bad_pixels) +
                   " pixels off the closed form by more than 1e-6 mm");

  // Random scenes: values clipped to [0, gel]; lowering only deepens.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng scene_rng(7200 + seed);
    std::vector<ObjectInstance> scene;
    const int boxes = 1 + scene_rng.uniform_int(3);
    for (int b = 0; b < boxes; ++b) {
      const double bw = scene_rng.uniform(6.0, 30.0);
      const double bh = scene_rng.uniform(6.0, 30.0);
      const double bz = scene_rng.uniform(2.0, 12.0);
      auto m = std::make_shared<const TriangleMesh>(extrude_polygon(
          {{0.0, 0.0}, {bw, 0.0}, {bw, bh}, {0.0, bh}}, bz));
      auto q = std::make_shared<const DepthBvh>(*m);
      scene.push_back(make_object(std::move(m), std::move(q),
                                  scene_rng.uniform(-20.0, 20.0),
                                  scene_rng.uniform(-20.0, 20.0),
                                  scene_rng.uniform(0.0, 2.0 * M_PI)));
    }
    const double x = scene_rng.uniform(-20.0, 20.0);
    const double y = scene_rng.uniform(-20.0, 20.0);
    const double z_high = scene_rng.uniform(2.0, 12.0);
    const double z_low =
        std::max(0.0, z_high - scene_rng.uniform(0.5, 4.0));
    const std::vector<double> shallow = render_depth(scene, {x, y, z_high});
    const std::vector<double> deep = render_depth(scene, {x, y, z_low});
    bool in_range = true;
    bool monotone = true;
    for (std::size_t p = 0; p < shallow.size(); ++p) {
      if (shallow[p] < 0.0 || shallow[p] > kGelThicknessMm ||
          deep[p] < 0.0 || deep[p] > kGelThicknessMm) {
        in_range = false;
      }
      if (deep[p] < shallow[p]) monotone = false;
    }
    check.expect(in_range,
                 "depth out of [0, gel] at scene " + std::to_string(seed));
    check.expect(monotone,
                 "lowering the sensor reduced a depth at scene " +
                     std::to_string(seed));
  }
}

// ---------------------------------------------------------------------------
// 7. Prediction inertness: with the base actions held fixed, changing every
//    prediction changes no observation anywhere.

void criterion_prediction_inertness(Check& check) {
  const std::vector<std::string> ids = environment_ids();
  parallel_tasks(
      ids.size(),
      [&](std::size_t i, Check& c) {
        const std::string& id = ids[i];
        auto env_a = make_env({id, "train", ""});
        auto env_b = make_env({id, "train", ""});
        const TaskSpec spec = env_a->spec();
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
          Rng rng(seed * 977 + i);
          const Observation first_a = env_a->reset(seed);
          const Observation first_b = env_b->reset(seed);
          c.expect(fingerprint(first_a) == fingerprint(first_b),
                   id + ": reset observations differ (seed " +
                       std::to_string(seed) + ")");
          int step = 0;
          while (!env_a->episode_done()) {
            Action a;
            Action b;
            for (int d = 0; d < spec.base_action_dim; ++d) {
              const float v = static_cast<float>(rng.uniform(-1.0, 1.0));
              a.base.push_back(v);
              b.base.push_back(v);
            }
            for (int d = 0; d < spec.prediction_space.size; ++d) {
              const float v = static_cast<float>(rng.uniform(-2.0, 2.0));
              a.prediction.push_back(v);
              b.prediction.push_back(v + 1.0f);
            }
            const StepOutcome out_a = env_a->step(a);
            const StepOutcome out_b = env_b->step(b);
            c.expect(fingerprint(out_a.observation) ==
                         fingerprint(out_b.observation),
                     id + ": observation depends on the prediction (seed " +
                         std::to_string(seed) + ", step " +
                         std::to_string(step) + ")");
            c.expect(out_a.terminated == out_b.terminated,
                     id + ": termination depends on the prediction");
            ++step;
          }
          c.expect(env_b->episode_done(),
                   id + ": episode length depends on the prediction");
        }
      },
      check);
}

// ---------------------------------------------------------------------------
// 8. Determinism and replay: recorded episodes replay bit-for-bit, and the
//    lane count never changes what a batch produces.

void criterion_determinism_replay(Check& check) {
  const std::vector<std::string> ids = environment_ids();
  parallel_tasks(
      ids.size(),
      [&](std::size_t i, Check& c) {
        const std::string& id = ids[i];
        RunConfig config;
        config.env = {id, "train", ""};
        config.agent = "random";
        config.episodes = 20;
        config.seed = 700;
        config.jobs = 1;
        const std::vector<EpisodeLog> logs = run_batch(config);
        for (std::size_t e = 0; e < logs.size(); ++e) {
          const ReplayReport report = replay_episode(logs[e], "");
          c.expect(report.ok, id + ": episode " + std::to_string(e) +
                                  " replay: " + report.detail);
        }
        config.jobs = 4;
        const std::vector<EpisodeLog> parallel = run_batch(config);
        c.expect(parallel.size() == logs.size(), id + ": batch size changed");
        for (std::size_t e = 0; e < logs.size(); ++e) {
          c.expect(to_jsonl(parallel[e]) == to_jsonl(logs[e]),
                   id + ": lane count changed episode " + std::to_string(e));
        }
        // Aggregates follow from identical logs; verify explicitly.
        std::vector<EpisodeMetrics> m1;
        std::vector<EpisodeMetrics> m4;
        for (std::size_t e = 0; e < logs.size(); ++e) {
          m1.push_back(episode_metrics(logs[e]));
          m4.push_back(episode_metrics(parallel[e]));
        }
        for (const AggregationMode mode :
             {AggregationMode::kAverage, AggregationMode::kFinal}) {
          const auto a1 = aggregate_metrics(m1, mode);
          const auto a4 = aggregate_metrics(m4, mode);
          bool same = a1.size() == a4.size();
          for (const auto& [name, agg] : a1) {
            const auto it = a4.find(name);
            if (it == a4.end() || it->second.value != agg.value ||
                it->second.episode_count != agg.episode_count) {
              same = false;
            }
          }
          c.expect(same, id + ": cross-lane aggregates differ");
        }
      },
      check);
}

// ---------------------------------------------------------------------------
// 9. Reference agents: the oracle is perfect everywhere, and the random
//    agent scores exactly at chance where chance is defined.

void criterion_reference_agents(Check& check) {
  const std::vector<std::string> ids = environment_ids();
  parallel_tasks(
      ids.size(),
      [&](std::size_t i, Check& c) {
        const std::string& id = ids[i];
        RunConfig config;
        config.env = {id, "train", ""};
        config.agent = "oracle";
        config.episodes = 3;
        config.seed = 300;
        config.jobs = 1;
        const std::vector<EpisodeLog> logs = run_batch(config);
        std::vector<EpisodeMetrics> metrics;
        for (const EpisodeLog& log : logs) {
          metrics.push_back(episode_metrics(log));
        }
        for (const AggregationMode mode :
             {AggregationMode::kAverage, AggregationMode::kFinal}) {
          const auto agg = aggregate_metrics(metrics, mode);
          const char* mode_name =
              mode == AggregationMode::kAverage ? "average" : "final";
          if (agg.count("accuracy")) {
            c.expect(agg.at("accuracy").value == 1.0,
                     id + ": oracle " + mode_name + " accuracy below 1");
          }
          for (const char* key : {"mse", "euclidean_distance", "linear_error"}) {
            if (agg.count(key)) {
              c.expect(agg.at(key).value == 0.0,
                       id + ": oracle " + mode_name + " " + key + " nonzero");
            }
          }
          // These two pass through a float32 target; allow its rounding.
          for (const char* key : {"angular_error", "volume_error_cm3"}) {
            if (agg.count(key)) {
              c.expect(std::abs(agg.at(key).value) <= kOracleRoundTripTol,
                       id + ": oracle " + mode_name + " " + key +
                           " beyond float rounding");
            }
          }
        }
      },
      check);

  // Uniform logits on a two-class task: the correct class gets exactly 1/2.
  RunConfig chance;
  chance.env = {"CircleSquare", "train", ""};
  chance.agent = "random";
  chance.episodes = 20;
  chance.seed = 40;
  chance.jobs = 4;
  for (const EpisodeLog& log : run_batch(chance)) {
    for (const StepRecord& step : log.steps) {
      bool found = false;
      const double p = find_metric(step.metrics, "correct_label_prob", &found);
      check.expect(found && p == 0.5,
                   "random agent on CircleSquare: correct_label_prob != 0.5");
    }
  }

  // Random guessing cannot approach the tactile classification ceiling.
  RunConfig tactile;
  tactile.env = {"TactileMNIST", "train", ""};
  tactile.agent = "random";
  tactile.episodes = 200;
  tactile.seed = 0;
  tactile.jobs = 8;
  const std::vector<EpisodeLog> logs = run_batch(tactile);
  std::vector<EpisodeMetrics> metrics;
  for (const EpisodeLog& log : logs) metrics.push_back(episode_metrics(log));
  const auto agg = aggregate_metrics(metrics, AggregationMode::kAverage);
  check.expect(agg.count("accuracy") == 1, "tactile accuracy metric missing");
  if (agg.count("accuracy")) {
    check.expect(agg.at("accuracy").value < kRandomTactileAccuracyCeiling,
                 "random agent tactile accuracy " +
                     std::to_string(agg.at("accuracy").value) + " >= 0.25");
  }
}

// ---------------------------------------------------------------------------
// 10. Agent competence: the scripted behaviors beat their do-nothing
//     counterparts on almost every seed.

void criterion_agent_competence(Check& check) {
  auto env = make_env({"LightDark", "train", ""});
  auto seeker = make_agent("lightdark-seeker");
  auto stay = make_agent("stay");
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EpisodeLog sought = run_episode(*env, *seeker, seed, "train");
    const EpisodeLog stayed = run_episode(*env, *stay, seed, "train");
    const double sought_mse = find_metric(sought.steps.back().metrics, "mse");
    const double stayed_mse = find_metric(stayed.steps.back().metrics, "mse");
    if (sought_mse < stayed_mse) ++wins;
  }
  check.expect(wins >= kLightDarkWinsRequired,
               "lightdark-seeker beat stay on only " + std::to_string(wins) +
                   "/100 seeds");

  auto glimpse_env = make_env({"CircleSquare", "train", ""});
  auto climber = make_agent("gradient-climber");
  const auto sees_shape = [](const Observation& obs) {
    const auto it = obs.find("glimpse");
    if (it == obs.end()) return false;
    for (float v : it->second.data) {
      if (v > 0.9f) return true;
    }
    return false;
  };
  int reached = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Observation first = glimpse_env->reset(seed);
    climber->begin_episode(glimpse_env->spec(), seed, first);
    bool hit = sees_shape(first);
    while (!glimpse_env->episode_done()) {
      const StepOutcome out = glimpse_env->step(climber->next_action());
      climber->feedback(out);
      if (sees_shape(out.observation)) hit = true;
    }
    if (hit) ++reached;
  }
  check.expect(reached >= kClimberReachesRequired,
               "gradient-climber reached the shape on only " +
                   std::to_string(reached) + "/100 seeds");
}

// ---------------------------------------------------------------------------
// 11. Protocol fuzz: ten thousand random frames survive an encode/decode/
//     re-encode round trip byte-for-byte; deliberately broken frames are
//     rejected with a decode error, never anything worse.

Tensor random_finite_tensor(Rng& rng) {
  Tensor t;
  const int rank = rng.uniform_int(4);
  std::int64_t elements = 1;
  for (int d = 0; d < rank; ++d) {
    const int dim = 1 + rng.uniform_int(4);
    t.shape.push_back(dim);
    elements *= dim;
  }
  for (std::int64_t e = 0; e < elements; ++e) {
    // Any finite float bit pattern, sign included.
    const auto bits =
        static_cast<std::uint32_t>(rng.next_u64()) & 0xBFFFFFFFu;
    t.data.push_back(std::bit_cast<float>(bits));
  }
  return t;
}

Observation random_observation(Rng& rng) {
  Observation obs;
  const int keys = 1 + rng.uniform_int(3);
  for (int k = 0; k < keys; ++k) {
    obs["sensor_" + std::to_string(k)] = random_finite_tensor(rng);
  }
  return obs;
}

std::string random_frame(Rng& rng, int kind, bool* agent_side) {
  *agent_side = false;
  switch (kind) {
    case 0: {
      TaskSpec spec;
      spec.env_id = "Env" + std::to_string(rng.uniform_int(1000));
      spec.base_action_dim = 1 + rng.uniform_int(5);
      spec.prediction_space = rng.uniform_int(2) == 0
                                  ? PredictionSpace::classification(
                                        2 + rng.uniform_int(8))
                                  : PredictionSpace::regression(
                                        1 + rng.uniform_int(5));
      spec.step_limit = 1 + rng.uniform_int(64);
      spec.reward_bonus = rng.uniform(-1.0, 1.0);
      return encode_hello(rng.next_u64() >> 1, spec);
    }
    case 1:
      return encode_reset(rng.next_u64() >> 1, rng.next_u64(),
                          random_observation(rng));
    case 2: {
      StepOutcome outcome;
      outcome.observation = random_observation(rng);
      outcome.reward = rng.uniform(-1e6, 1e6);
      outcome.loss = rng.uniform(0.0, 1e6);
      outcome.terminated = rng.uniform_int(2) == 1;
      outcome.truncated = false;
      return encode_step(rng.next_u64() >> 1, outcome);
    }
    case 3:
      return encode_close(rng.next_u64() >> 1);
    case 4: {
      *agent_side = true;
      Action action;
      const int base_n = 1 + rng.uniform_int(5);
      for (int d = 0; d < base_n; ++d) {
        action.base.push_back(std::bit_cast<float>(
            static_cast<std::uint32_t>(rng.next_u64()) & 0xBFFFFFFFu));
      }
      action.oracle_prediction = rng.uniform_int(4) == 0;
      const int pred_n = rng.uniform_int(6);
      for (int d = 0; d < pred_n; ++d) {
        action.prediction.push_back(
            static_cast<float>(rng.uniform(-10.0, 10.0)));
      }
      return encode_act(rng.next_u64() >> 1, action);
    }
    default:
      *agent_side = true;
      return encode_ack(rng.next_u64() >> 1);
  }
}

std::string reencode(const std::string& line, bool agent_side) {
  if (agent_side) {
    const AgentReply reply = decode_agent_reply(line);
    return reply.ack ? encode_ack(reply.seq)
                     : encode_act(reply.seq, reply.action);
  }
  const EnvMessage msg = decode_env_message(line);
  switch (msg.kind) {
    case EnvMessage::Kind::kHello: {
      TaskSpec spec;
      spec.env_id = msg.env_id;
      spec.base_action_dim = msg.base_action_dim;
      spec.prediction_space = msg.prediction_space;
      spec.step_limit = msg.step_limit;
      spec.reward_bonus = msg.reward_bonus;
      return encode_hello(msg.seq, spec);
    }
    case EnvMessage::Kind::kReset:
      return encode_reset(msg.seq, msg.seed, msg.obs);
    case EnvMessage::Kind::kStep: {
      StepOutcome outcome;
      outcome.observation = msg.obs;
      outcome.reward = msg.reward;
      outcome.loss = msg.loss;
      outcome.terminated = msg.terminated;
      outcome.truncated = msg.truncated;
      return encode_step(msg.seq, outcome);
    }
    case EnvMessage::Kind::kClose:
      return encode_close(msg.seq);
  }
  return "";
}

void criterion_protocol_fuzz(Check& check) {
  Rng rng(81000);
  int survived = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    bool agent_side = false;
    const std::string line = random_frame(rng, trial % 6, &agent_side);
    if (reencode(line, agent_side) == line) ++survived;
  }
  check.expect(survived == 10000,
               std::to_string(10000 - survived) +
                   " of 10000 frames did not round trip byte-for-byte");

  // Ten corruption patterns, ten random payloads each; every one must be
  // rejected with a decode error.
  Rng bad_rng(82000);
  int rejected = 0;
  int attempted = 0;
  for (int payload = 0; payload < 10; ++payload) {
    for (int pattern = 0; pattern < 10; ++pattern) {
      bool agent_side = false;
      std::string line;
      nlohmann::json j;
      switch (pattern) {
        case 0:  // truncated frame
          line = random_frame(bad_rng, 1, &agent_side);
          line = line.substr(0, 1 + line.size() / 2);
          break;
        case 1:  // missing type
          j = nlohmann::json::parse(random_frame(bad_rng, 1, &agent_side));
          j.erase("type");
          line = j.dump();
          break;
        case 2:  // unknown type
          j = nlohmann::json::parse(random_frame(bad_rng, 2, &agent_side));
          j["type"] = "teleport";
          line = j.dump();
          break;
        case 3:  // sequence number of the wrong kind
          j = nlohmann::json::parse(random_frame(bad_rng, 3, &agent_side));
          j["seq"] = "first";
          line = j.dump();
          break;
        case 4:  // corrupt tensor payload
          j = nlohmann::json::parse(random_frame(bad_rng, 1, &agent_side));
          j["obs"].begin().value()["data"] = "@@@@";
          line = j.dump();
          break;
        case 5:  // tensor shape no longer matches its payload
          j = nlohmann::json::parse(random_frame(bad_rng, 1, &agent_side));
          j["obs"].begin().value()["shape"] = {9, 9, 9};
          line = j.dump();
          break;
        case 6:  // scalar field of the wrong kind
          j = nlohmann::json::parse(random_frame(bad_rng, 2, &agent_side));
          j["reward"] = "huge";
          line = j.dump();
          break;
        case 7:  // hello with an unknown prediction kind
          j = nlohmann::json::parse(random_frame(bad_rng, 0, &agent_side));
          j["prediction"]["kind"] = "quantum";
          line = j.dump();
          break;
        case 8:  // act frame missing its prediction tensor
          j = nlohmann::json::parse(random_frame(bad_rng, 4, &agent_side));
          agent_side = true;
          j.erase("prediction");
          line = j.dump();
          break;
        default:  // frame missing its sequence number
          j = nlohmann::json::parse(random_frame(bad_rng, 3, &agent_side));
          j.erase("seq");
          line = j.dump();
          break;
      }
      ++attempted;
      try {
        if (agent_side) {
          decode_agent_reply(line);
        } else {
          decode_env_message(line);
        }
        check.expect(false, "corrupt frame accepted (pattern " +
                                std::to_string(pattern) + ")");
      } catch (const DecodeError&) {
        ++rejected;
      } catch (const std::exception& e) {
        check.expect(false, std::string("wrong exception for corrupt frame: ") +
                                e.what());
      }
    }
  }
  check.expect(attempted == 100 && rejected == attempted,
               std::to_string(rejected) + "/" + std::to_string(attempted) +
                   " corrupt frames rejected with a decode error");
}

// ---------------------------------------------------------------------------
// 12. Metric semantics: first-correct / last-incorrect indices follow the
//     worked example, and undefined summaries stay absent rather than zero.

void criterion_metric_semantics(Check& check) {
  const auto mixed = episode_classification_summary({0.0, 0.0, 1.0, 1.0});
  check.expect(mixed.first_correct.has_value() && *mixed.first_correct == 2,
               "accuracy 0,0,1,1: first_correct != 2");
  check.expect(mixed.last_incorrect.has_value() && *mixed.last_incorrect == 1,
               "accuracy 0,0,1,1: last_incorrect != 1");

  const auto hopeless = episode_classification_summary({0.0, 0.0, 0.0});
  check.expect(!hopeless.first_correct.has_value(),
               "never-correct episode reported a first_correct");
  check.expect(hopeless.last_incorrect.has_value() &&
                   *hopeless.last_incorrect == 2,
               "never-correct episode: last_incorrect != 2");

  // The same semantics must hold via the episode-log pathway.
  EpisodeLog log;
  log.env_id = "CircleSquare";
  for (double acc : {0.0, 0.0, 1.0, 1.0}) {
    StepRecord step;
    step.metrics = {{"accuracy", acc}};
    log.steps.push_back(step);
  }
  const EpisodeMetrics from_log = episode_metrics(log);
  check.expect(from_log.per_episode.count("first_correct") == 1 &&
                   from_log.per_episode.at("first_correct") == 2.0,
               "log pathway: first_correct != 2");
  check.expect(from_log.per_episode.count("last_incorrect") == 1 &&
                   from_log.per_episode.at("last_incorrect") == 1.0,
               "log pathway: last_incorrect != 1");

  EpisodeLog never;
  never.env_id = "CircleSquare";
  for (int i = 0; i < 2; ++i) {
    StepRecord step;
    step.metrics = {{"accuracy", 0.0}};
    never.steps.push_back(step);
  }
  const EpisodeMetrics from_never = episode_metrics(never);
  check.expect(from_never.per_episode.count("first_correct") == 0,
               "log pathway: never-correct episode kept first_correct");
  check.expect(from_never.per_episode.count("last_incorrect") == 1 &&
                   from_never.per_episode.at("last_incorrect") == 1.0,
               "log pathway: last_incorrect != 1 for never-correct episode");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>>
      criteria = {
          {"reward-decomposition", criterion_reward_decomposition},
          {"constant-fidelity", criterion_constant_fidelity},
          {"raycast-oracle", criterion_raycast},
          {"map-generators", criterion_map_generators},
          {"mesh-pipeline", criterion_mesh_pipeline},
          {"depth-renderer", criterion_depth_renderer},
          {"prediction-inertness", criterion_prediction_inertness},
          {"determinism-replay", criterion_determinism_replay},
          {"reference-agents", criterion_reference_agents},
          {"agent-competence", criterion_agent_competence},
          {"protocol-fuzz", criterion_protocol_fuzz},
          {"metric-semantics", criterion_metric_semantics},
      };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unhandled exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (check.ok()) {
      std::printf("PASS  %-22s (%d checks, %.1fs)\n", name, check.total(),
                  seconds);
    } else {
      std::printf("FAIL  %-22s (%d of %d checks failed, %.1fs): %s\n", name,
                  check.failures(), check.total(), seconds,
                  check.detail().c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failed);
  return 1;
}
