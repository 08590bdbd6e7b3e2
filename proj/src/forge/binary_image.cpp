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

#include "percept/forge/binary_image.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "percept/core/error.hpp"

namespace percept {

BinaryImage BinaryImage::filled(int width, int height, bool value) {
  if (width <= 0 || height <= 0) {
    throw InvalidArgument("BinaryImage: dimensions must be positive");
  }
  BinaryImage img;
  img.width = width;
  img.height = height;
  img.bits.assign(static_cast<std::size_t>(width) * height, value ? 1 : 0);
  return img;
}

int BinaryImage::count() const {
  int n = 0;
  for (std::uint8_t b : bits) n += b != 0;
  return n;
}

BinaryImage binary_erode(const BinaryImage& img, int k) {
  if (k <= 0 || k % 2 == 0) {
    throw InvalidArgument("binary_erode: kernel size must be odd and positive");
  }
  if (k == 1) return img;

  // Summed-area table over the bits; a k-by-k window is all-true iff its sum
  // is k*k. Windows poking out of bounds can never reach that, matching the
  // out-of-bounds-is-false rule.
  const int w = img.width;
  const int h = img.height;
  std::vector<std::int32_t> sat(static_cast<std::size_t>(w + 1) * (h + 1), 0);
  const auto sat_at = [&](int x, int y) -> std::int32_t& {
    return sat[static_cast<std::size_t>(y) * (w + 1) + x];
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      sat_at(x + 1, y + 1) = (img.at(x, y) ? 1 : 0) + sat_at(x, y + 1) +
                             sat_at(x + 1, y) - sat_at(x, y);
    }
  }

  const int r = k / 2;
  const std::int32_t full = k * k;
  BinaryImage out = BinaryImage::filled(w, h, false);
  for (int y = 0; y < h; ++y) {
    const int y0 = y - r;
    const int y1 = y + r + 1;
    if (y0 < 0 || y1 > h) continue;
    for (int x = 0; x < w; ++x) {
      const int x0 = x - r;
      const int x1 = x + r + 1;
      if (x0 < 0 || x1 > w) continue;
      const std::int32_t sum =
          sat_at(x1, y1) - sat_at(x0, y1) - sat_at(x1, y0) + sat_at(x0, y0);
      if (sum == full) out.set(x, y, true);
    }
  }
  return out;
}

std::string to_pbm(const BinaryImage& img) {
  std::ostringstream out;
  out << "P1\n" << img.width << " " << img.height << "\n";
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (x > 0) out << ' ';
      out << (img.at(x, y) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Reads the next PBM token, skipping whitespace and # comments.
bool next_token(std::istringstream& in, std::string& token) {
  token.clear();
  char c;
  while (in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) return true;
      continue;
    }
    token.push_back(c);
  }
  return !token.empty();
}

}  // namespace

BinaryImage from_pbm(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  if (!next_token(in, token) || token != "P1") {
    throw InvalidArgument("from_pbm: missing P1 magic");
  }
  int w = 0;
  int h = 0;
  try {
    if (!next_token(in, token)) throw InvalidArgument("");
    w = std::stoi(token);
    if (!next_token(in, token)) throw InvalidArgument("");
    h = std::stoi(token);
  } catch (const std::exception&) {
    throw InvalidArgument("from_pbm: malformed dimensions");
  }
  if (w <= 0 || h <= 0) {
    throw InvalidArgument("from_pbm: dimensions must be positive");
  }
  BinaryImage img = BinaryImage::filled(w, h, false);
  // P1 allows digits to be packed without separators; read bit characters.
  int filled = 0;
  char c;
  while (filled < w * h && in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {
      }
      continue;
    }
    if (c == '0' || c == '1') {
      img.bits[static_cast<std::size_t>(filled)] = c == '1' ? 1 : 0;
      ++filled;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw InvalidArgument("from_pbm: unexpected character in raster");
    }
  }
  if (filled != w * h) {
    throw InvalidArgument("from_pbm: truncated raster");
  }
  return img;
}

}  // namespace percept
