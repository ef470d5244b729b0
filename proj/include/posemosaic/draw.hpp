#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "posemosaic/image.hpp"
#include "posemosaic/vec.hpp"

namespace posemosaic {

// Bresenham pixels of the segment a-b, clipped to [0,w) x [0,h).
inline std::vector<std::pair<int, int>> segment_pixels(Vec2 a, Vec2 b, int w,
                                                       int h) {
  int x0 = static_cast<int>(std::lround(a.x));
  int y0 = static_cast<int>(std::lround(a.y));
  const int x1 = static_cast<int>(std::lround(b.x));
  const int y1 = static_cast<int>(std::lround(b.y));
  const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  std::vector<std::pair<int, int>> out;
  for (;;) {
    if (x0 >= 0 && x0 < w && y0 >= 0 && y0 < h) out.emplace_back(x0, y0);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
  return out;
}

inline void draw_line(Image& img, Vec2 a, Vec2 b, Rgb color) {
  for (const auto& [x, y] : segment_pixels(a, b, img.width(), img.height()))
    img.set(x, y, color);
}

inline double point_segment_distance(const Vec2& p, const Vec2& a,
                                     const Vec2& b) {
  const Vec2 seg = b - a;
  const double len2 = seg.dot(seg);
  const double t =
      len2 > 0.0 ? std::clamp((p - a).dot(seg) / len2, 0.0, 1.0) : 0.0;
  return dist(a + seg * t, p);
}

// Filled capsule (thick segment with round caps).
inline void draw_capsule(Image& img, Vec2 a, Vec2 b, double radius, Rgb color) {
  const int x_lo = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - radius)));
  const int x_hi = std::min(img.width() - 1,
                            static_cast<int>(std::ceil(std::max(a.x, b.x) + radius)));
  const int y_lo = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - radius)));
  const int y_hi = std::min(img.height() - 1,
                            static_cast<int>(std::ceil(std::max(a.y, b.y) + radius)));
  for (int y = y_lo; y <= y_hi; ++y) {
    for (int x = x_lo; x <= x_hi; ++x) {
      const Vec2 p{static_cast<double>(x), static_cast<double>(y)};
      if (point_segment_distance(p, a, b) <= radius) img.set(x, y, color);
    }
  }
}

inline void draw_disc(Image& img, Vec2 center, double radius, Rgb color) {
  draw_capsule(img, center, center, radius, color);
}

}  // namespace posemosaic
