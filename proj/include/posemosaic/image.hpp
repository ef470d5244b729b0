#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "posemosaic/pose.hpp"
#include "posemosaic/vec.hpp"

namespace posemosaic {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// 8-bit RGB raster, row-major.
class Image {
 public:
  Image() = default;
  Image(int width, int height, Rgb fill = {})
      : width_(width), height_(height), data_(3u * width * height) {
    for (int i = 0; i < width * height; ++i) {
      data_[3 * i] = fill.r;
      data_[3 * i + 1] = fill.g;
      data_[3 * i + 2] = fill.b;
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }

  Rgb at(int x, int y) const {
    const std::size_t i = 3u * (static_cast<std::size_t>(y) * width_ + x);
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const std::size_t i = 3u * (static_cast<std::size_t>(y) * width_ + x);
    data_[i] = c.r;
    data_[i + 1] = c.g;
    data_[i + 2] = c.b;
  }
  bool contains(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  const std::vector<std::uint8_t>& bytes() const { return data_; }
  std::vector<std::uint8_t>& bytes() { return data_; }

  bool operator==(const Image&) const = default;

  Image flipped_horizontal() const {
    Image out(width_, height_);
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x) out.set(width_ - 1 - x, y, at(x, y));
    return out;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

inline std::uint8_t round_intensity(double v) {
  // Half-up rounding keeps blended outputs bit-reproducible.
  const double r = std::floor(v + 0.5);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

// Bilinear lookup with sample coordinates clamped to the image border.
inline std::array<double, 3> bilinear_sample(const Image& img, double x,
                                             double y) {
  const double cx = std::clamp(x, 0.0, static_cast<double>(img.width() - 1));
  const double cy = std::clamp(y, 0.0, static_cast<double>(img.height() - 1));
  const int x0 = static_cast<int>(std::floor(cx));
  const int y0 = static_cast<int>(std::floor(cy));
  const int x1 = std::min(x0 + 1, img.width() - 1);
  const int y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = cx - x0;
  const double fy = cy - y0;
  const Rgb p00 = img.at(x0, y0), p10 = img.at(x1, y0);
  const Rgb p01 = img.at(x0, y1), p11 = img.at(x1, y1);
  auto lerp2 = [&](double a, double b, double c, double d) {
    const double top = a + (b - a) * fx;
    const double bot = c + (d - c) * fx;
    return top + (bot - top) * fy;
  };
  return {lerp2(p00.r, p10.r, p01.r, p11.r),
          lerp2(p00.g, p10.g, p01.g, p11.g),
          lerp2(p00.b, p10.b, p01.b, p11.b)};
}

// Resamples `src` under the source->destination transform: each destination
// pixel samples src at the inverse-mapped position, bilinear, edge-clamped.
// An identity transform reproduces the source bit-exactly.
inline Image warp_similarity(const Image& src, const SimilarityTransform2D& t,
                             int out_width = kFrameSize,
                             int out_height = kFrameSize) {
  const SimilarityTransform2D inv = t.inverse();
  Image out(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    for (int x = 0; x < out_width; ++x) {
      const Vec2 s = inv.apply({static_cast<double>(x), static_cast<double>(y)});
      const auto rgb = bilinear_sample(src, s.x, s.y);
      out.set(x, y,
              {round_intensity(rgb[0]), round_intensity(rgb[1]),
               round_intensity(rgb[2])});
    }
  }
  return out;
}

}  // namespace posemosaic
