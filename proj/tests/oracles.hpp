// Independent reference computations the test suites compare against. These
// deliberately use the most direct formulation available (exhaustive scans,
// per-pixel solves, grid searches) rather than sharing code with the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "posemosaic/pose.hpp"
#include "posemosaic/rng.hpp"
#include "posemosaic/skeleton.hpp"
#include "posemosaic/vec.hpp"

namespace oracles {

using posemosaic::Pose2D;
using posemosaic::Pose3D;
using posemosaic::Rng;
using posemosaic::SkeletonModel;
using posemosaic::Vec2;
using posemosaic::Vec3;

// ---------------------------------------------------------------- geometry

inline double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b,
                                 double* t_out = nullptr) {
  const Vec2 seg = b - a;
  const double len2 = seg.dot(seg);
  const double t =
      len2 > 0.0 ? std::clamp((p - a).dot(seg) / len2, 0.0, 1.0) : 0.0;
  if (t_out) *t_out = t;
  return posemosaic::dist(a + seg * t, p);
}

// ------------------------------------------------- rigid alignment (grid)

// Exhaustive ZYZ Euler grid search for the rotation minimizing the summed
// squared residual after centroid alignment. Returns the RMS residual of the
// best grid rotation.
inline double grid_procrustes_rms(const Pose3D& a, const Pose3D& b,
                                  double step_deg) {
  const int n = a.joint_count();
  Vec3 ca, cb;
  for (int k = 0; k < n; ++k) {
    ca += a.coords[k];
    cb += b.coords[k];
  }
  ca = ca * (1.0 / n);
  cb = cb * (1.0 / n);
  std::vector<Vec3> pa(n), pb(n);
  for (int k = 0; k < n; ++k) {
    pa[k] = a.coords[k] - ca;
    pb[k] = b.coords[k] - cb;
  }

  constexpr double deg = std::numbers::pi / 180.0;
  const int n_a = static_cast<int>(std::lround(360.0 / step_deg));
  const int n_b = static_cast<int>(std::lround(180.0 / step_deg)) + 1;
  double best = std::numeric_limits<double>::infinity();
  for (int ia = 0; ia < n_a; ++ia) {
    const double alpha = ia * step_deg * deg;
    const double c1 = std::cos(alpha), s1 = std::sin(alpha);
    for (int ib = 0; ib < n_b; ++ib) {
      const double beta = ib * step_deg * deg;
      const double c2 = std::cos(beta), s2 = std::sin(beta);
      for (int ic = 0; ic < n_a; ++ic) {
        const double gamma = ic * step_deg * deg;
        const double c3 = std::cos(gamma), s3 = std::sin(gamma);
        // R = Rz(alpha) * Ry(beta) * Rz(gamma), row-major.
        const double r00 = c1 * c2 * c3 - s1 * s3;
        const double r01 = -c1 * c2 * s3 - s1 * c3;
        const double r02 = c1 * s2;
        const double r10 = s1 * c2 * c3 + c1 * s3;
        const double r11 = -s1 * c2 * s3 + c1 * c3;
        const double r12 = s1 * s2;
        const double r20 = -s2 * c3;
        const double r21 = s2 * s3;
        const double r22 = c2;
        double ss = 0.0;
        for (int k = 0; k < n; ++k) {
          const Vec3& p = pa[k];
          const double x = r00 * p.x + r01 * p.y + r02 * p.z - pb[k].x;
          const double y = r10 * p.x + r11 * p.y + r12 * p.z - pb[k].y;
          const double z = r20 * p.x + r21 * p.y + r22 * p.z - pb[k].z;
          ss += x * x + y * y + z * z;
          if (ss >= best) break;
        }
        if (ss < best) best = ss;
      }
    }
  }
  return std::sqrt(best / n);
}

// ------------------------------------------------------ occlusion z-buffer

// Per-pixel depth-buffer visibility oracle: bones are rasterized with width
// `radius`, each covered pixel keeping the closest bone depth; a joint is
// occluded when the buffer at its rounded pixel is owned by a non-adjacent
// bone strictly in front of it. `marginal` is set when the decision depends
// on values near the thresholds, so callers can skip those joints.
inline std::vector<int> zbuffer_visibility(
    const std::vector<Vec2>& px, const std::vector<double>& depth,
    const SkeletonModel& skeleton, double radius, int frame,
    std::vector<bool>* marginal = nullptr) {
  const int n = static_cast<int>(px.size());
  std::vector<int> visible(n, 1);
  if (marginal) marginal->assign(n, false);
  for (int k = 0; k < n; ++k) {
    const int cx = static_cast<int>(std::lround(px[k].x));
    const int cy = static_cast<int>(std::lround(px[k].y));
    const Vec2 pixel{static_cast<double>(std::clamp(cx, 0, frame - 1)),
                     static_cast<double>(std::clamp(cy, 0, frame - 1))};
    for (std::size_t e = 0; e < skeleton.edges.size(); ++e) {
      const auto& [a, b] = skeleton.edges[e];
      if (a == k || b == k) continue;
      double t = 0.0;
      const double d = point_segment_dist(pixel, px[a], px[b], &t);
      const double seg_depth = depth[a] + (depth[b] - depth[a]) * t;
      if (marginal &&
          (std::abs(d - radius) < 1.5 || std::abs(seg_depth - depth[k]) < 5.0))
        (*marginal)[k] = true;
      if (d <= radius && seg_depth < depth[k]) visible[k] = 0;
    }
  }
  return visible;
}

// ------------------------------------------------------------ random poses

inline Pose2D random_pose2d(Rng& rng, int n, double lo = 20.0,
                            double hi = 200.0) {
  Pose2D p;
  p.coords.resize(n);
  p.visible.assign(n, 1);
  for (auto& c : p.coords) c = {rng.uniform(lo, hi), rng.uniform(lo, hi)};
  return p;
}

// Random 2D pose on a 1/1024 px lattice (exactly representable coordinates).
inline Pose2D random_lattice_pose2d(Rng& rng, int n, int width = 220) {
  Pose2D p;
  p.coords.resize(n);
  p.visible.assign(n, 1);
  const std::uint64_t steps = static_cast<std::uint64_t>(width - 1) * 1024;
  for (auto& c : p.coords) {
    c = {static_cast<double>(rng.below(steps + 1)) / 1024.0,
         static_cast<double>(rng.below(steps + 1)) / 1024.0};
  }
  return p;
}

inline Pose3D random_pose3d(Rng& rng, int n, double extent_mm = 600.0) {
  Pose3D p;
  p.coords.resize(n);
  for (auto& c : p.coords) {
    c = {rng.uniform(-extent_mm, extent_mm), rng.uniform(-extent_mm, extent_mm),
         rng.uniform(-extent_mm, extent_mm)};
  }
  return p;
}

inline posemosaic::SimilarityTransform2D random_similarity(Rng& rng) {
  return posemosaic::SimilarityTransform2D::from_angle(
      rng.uniform(0.0, 2.0 * std::numbers::pi), rng.uniform(0.4, 2.5),
      {rng.uniform(-40.0, 40.0), rng.uniform(-40.0, 40.0)});
}

}  // namespace oracles
