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

#include "percept/forge/digit_mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "percept/core/error.hpp"
#include "percept/core/rng.hpp"
#include "percept/forge/marching_cubes.hpp"
#include "percept/forge/occupancy.hpp"
#include "percept/forge/smooth.hpp"

namespace percept {

const std::vector<int>& digit_kernel_sizes() {
  static const std::vector<int> kernels = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19};
  return kernels;
}

TriangleMesh digit_to_mesh(const BinaryImage& img) {
  if (img.width != kDigitImageSize || img.height != kDigitImageSize) {
    throw InvalidArgument("digit_to_mesh: expected a 500x500 bitmap");
  }
  if (img.count() == 0) {
    throw InvalidArgument("digit_to_mesh: blank image");
  }

  // Flip rows so +y points up in mesh space while keeping the outward
  // triangle winding (a negative scale factor would mirror it).
  BinaryImage upright = BinaryImage::filled(img.width, img.height, false);
  double cx = 0.0;
  double cy = 0.0;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (!img.at(x, y)) continue;
      upright.set(x, img.height - 1 - y, true);
      cx += x;
      cy += img.height - 1 - y;
    }
  }
  const double ink = img.count();
  cx /= ink;
  cy /= ink;

  const OccupancyGrid3D grid = build_occupancy(upright, digit_kernel_sizes());
  TriangleMesh mesh = smooth_mesh(marching_cubes(grid));
  mesh = scaled(mesh, {kMmPerPixel, kMmPerPixel, kLayerThicknessMm});
  const double z0 = min_corner(mesh)[2];
  return translated(mesh, {-cx * kMmPerPixel, -cy * kMmPerPixel, -z0});
}

namespace {

using GlyphPoint = std::array<double, 2>;
using Stroke = std::vector<GlyphPoint>;

void arc(Stroke& stroke, double cx, double cy, double r, double a0, double a1,
         int segments = 24) {
  for (int i = 0; i <= segments; ++i) {
    const double t = a0 + (a1 - a0) * i / segments;
    stroke.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
  }
}

// Stroke skeletons on a unit canvas, y growing downward like image rows.
std::vector<Stroke> glyph_strokes(int digit) {
  const double pi = M_PI;
  std::vector<Stroke> strokes;
  Stroke s;
  switch (digit) {
    case 0:
      arc(s, 0.5, 0.5, 0.3, 0.0, 2 * pi, 40);
      strokes.push_back(s);
      break;
    case 1:
      strokes.push_back({{0.36, 0.28}, {0.54, 0.13}, {0.54, 0.87}});
      break;
    case 2:
      arc(s, 0.5, 0.33, 0.21, pi, 0.15 * pi, 24);
      s.push_back({0.3, 0.86});
      s.push_back({0.74, 0.86});
      strokes.push_back(s);
      break;
    case 3:
      arc(s, 0.48, 0.32, 0.19, 0.85 * pi, -0.4 * pi, 24);
      arc(s, 0.48, 0.65, 0.22, 0.45 * pi, -0.85 * pi, 24);
      strokes.push_back(s);
      break;
    case 4:
      strokes.push_back({{0.6, 0.13}, {0.26, 0.6}, {0.78, 0.6}});
      strokes.push_back({{0.6, 0.13}, {0.6, 0.87}});
      break;
    case 5:
      s = {{0.72, 0.14}, {0.32, 0.14}, {0.3, 0.46}};
      arc(s, 0.48, 0.63, 0.23, 0.85 * pi, -0.75 * pi, 28);
      strokes.push_back(s);
      break;
    case 6:
      arc(s, 0.62, 0.2, 0.45, 0.62 * pi, 0.95 * pi, 12);
      arc(s, 0.5, 0.62, 0.23, 0.95 * pi, -1.05 * pi, 36);
      strokes.push_back(s);
      break;
    case 7:
      strokes.push_back({{0.26, 0.14}, {0.75, 0.14}, {0.42, 0.87}});
      break;
    case 8:
      arc(s, 0.5, 0.31, 0.17, 0.5 * pi, -1.5 * pi, 28);
      strokes.push_back(s);
      s.clear();
      arc(s, 0.5, 0.66, 0.21, 0.5 * pi, -1.5 * pi, 28);
      strokes.push_back(s);
      break;
    case 9:
      arc(s, 0.5, 0.36, 0.2, 0.0, 2 * pi, 28);
      strokes.push_back(s);
      strokes.push_back({{0.7, 0.38}, {0.6, 0.86}});
      break;
    default:
      throw InvalidArgument("synth_digit_bitmap: digit must be 0-9");
  }
  return strokes;
}

double point_segment_distance(double px, double py, const GlyphPoint& a,
                              const GlyphPoint& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((px - a[0]) * dx + (py - a[1]) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double qx = a[0] + t * dx;
  const double qy = a[1] + t * dy;
  return std::hypot(px - qx, py - qy);
}

}  // namespace

BinaryImage synth_digit_bitmap(int digit, std::uint64_t seed) {
  std::vector<Stroke> strokes = glyph_strokes(digit);
  Rng rng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(digit + 1)));

  // Seeded distortion: similarity transform about the canvas center plus
  // per-point jitter and a thickness draw.
  const double scale = rng.uniform(0.82, 1.08);
  const double rot = rng.uniform(-0.15, 0.15);
  const double shift_x = rng.uniform(-0.05, 0.05);
  const double shift_y = rng.uniform(-0.05, 0.05);
  const double thickness = rng.uniform(0.05, 0.075);
  const double cos_r = std::cos(rot);
  const double sin_r = std::sin(rot);
  for (Stroke& stroke : strokes) {
    for (GlyphPoint& p : stroke) {
      const double x = p[0] - 0.5 + rng.uniform(-0.012, 0.012);
      const double y = p[1] - 0.5 + rng.uniform(-0.012, 0.012);
      p[0] = 0.5 + shift_x + scale * (cos_r * x - sin_r * y);
      p[1] = 0.5 + shift_y + scale * (sin_r * x + cos_r * y);
    }
  }

  const int size = kDigitImageSize;
  BinaryImage img = BinaryImage::filled(size, size, false);
  const double radius = thickness / 2.0;
  const int pad = static_cast<int>(radius * size) + 2;
  for (const Stroke& stroke : strokes) {
    for (std::size_t i = 0; i + 1 < stroke.size(); ++i) {
      const GlyphPoint& a = stroke[i];
      const GlyphPoint& b = stroke[i + 1];
      const int x0 = std::max(
          0, static_cast<int>(std::min(a[0], b[0]) * size) - pad);
      const int x1 = std::min(
          size - 1, static_cast<int>(std::max(a[0], b[0]) * size) + pad);
      const int y0 = std::max(
          0, static_cast<int>(std::min(a[1], b[1]) * size) - pad);
      const int y1 = std::min(
          size - 1, static_cast<int>(std::max(a[1], b[1]) * size) + pad);
      for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
          if (img.at(x, y)) continue;
          const double px = (x + 0.5) / size;
          const double py = (y + 0.5) / size;
          if (point_segment_distance(px, py, a, b) <= radius) {
            img.set(x, y, true);
          }
        }
      }
    }
  }
  return img;
}

BinaryImage grayscale_to_digit_bitmap(const std::vector<float>& pixels,
                                      int width, int height) {
  if (width < 2 || height < 2 ||
      pixels.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidArgument("grayscale_to_digit_bitmap: bad image dimensions");
  }
  BinaryImage out = BinaryImage::filled(kDigitImageSize, kDigitImageSize, false);
  const double sx = static_cast<double>(width) / kDigitImageSize;
  const double sy = static_cast<double>(height) / kDigitImageSize;
  auto sample = [&](int x, int y) {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return static_cast<double>(pixels[static_cast<std::size_t>(y) * width + x]);
  };
  for (int oy = 0; oy < kDigitImageSize; ++oy) {
    const double fy = (oy + 0.5) * sy - 0.5;
    const int y0 = static_cast<int>(std::floor(fy));
    const double wy = fy - y0;
    for (int ox = 0; ox < kDigitImageSize; ++ox) {
      const double fx = (ox + 0.5) * sx - 0.5;
      const int x0 = static_cast<int>(std::floor(fx));
      const double wx = fx - x0;
      const double v =
          (1.0 - wy) * ((1.0 - wx) * sample(x0, y0) + wx * sample(x0 + 1, y0)) +
          wy * ((1.0 - wx) * sample(x0, y0 + 1) + wx * sample(x0 + 1, y0 + 1));
      if (v > 0.5) out.set(ox, oy, true);
    }
  }
  return out;
}

}  // namespace percept
