#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "posemosaic/errors.hpp"
#include "posemosaic/pose.hpp"
#include "posemosaic/skeleton.hpp"
#include "posemosaic/vec.hpp"

namespace posemosaic {

// Virtual view orbiting the torso center. The subject sits at a fixed
// distance, so projection reduces to a pinhole evaluated at that depth
// followed by the 220x220 renormalization.
struct Camera {
  double azimuth = 0.0;            // degrees, [0, 360)
  double elevation = 0.0;          // degrees, [-45, 45]
  double focal = 1100.0;           // pixels
  double subject_distance = 5000;  // millimeters

  void validate() const {
    if (elevation < -45.0 || elevation > 45.0)
      throw config_error("camera elevation outside [-45, 45]");
    if (focal <= 0.0 || subject_distance <= 0.0)
      throw config_error("camera focal and subject_distance must be positive");
  }
};

struct ProjectionConfig {
  double margin = 10.0;          // px kept free around the pose bbox
  double occlusion_radius = 6.0;  // px, bone proximity for self-occlusion
  int frame = kFrameSize;
};

namespace detail {

struct CameraBasis {
  Vec3 right, down, forward;
};

inline CameraBasis camera_basis(const Camera& cam) {
  constexpr double deg = std::numbers::pi / 180.0;
  const double a = cam.azimuth * deg;
  const double e = cam.elevation * deg;
  // Camera sits at subject_distance along (cos e cos a, cos e sin a, sin e)
  // looking at the torso origin, world +z up.
  const Vec3 forward{-std::cos(e) * std::cos(a), -std::cos(e) * std::sin(a),
                     -std::sin(e)};
  const Vec3 up{0.0, 0.0, 1.0};
  const Vec3 right = forward.cross(up).normalized();
  const Vec3 cam_up = right.cross(forward);
  return {right, Vec3{-cam_up.x, -cam_up.y, -cam_up.z}, forward};
}

}  // namespace detail

// Rotates a torso-centered pose into camera axes: x right, y down (image
// convention), z along the view direction. Torso center stays at the origin.
inline Pose3D orient_pose(const Pose3D& pose, const Camera& cam) {
  const auto basis = detail::camera_basis(cam);
  Pose3D out;
  out.coords.reserve(pose.coords.size());
  for (const auto& p : pose.coords) {
    out.coords.push_back(
        {p.dot(basis.right), p.dot(basis.down), p.dot(basis.forward)});
  }
  return out;
}

namespace detail {

// Self-occlusion flags on already-projected coordinates: a joint is occluded
// when a bone not incident to it passes within `radius` px of the joint's
// projection at strictly smaller camera depth.
inline std::vector<std::uint8_t> occlusion_flags(
    const std::vector<Vec2>& px, const std::vector<double>& depth,
    const SkeletonModel& skeleton, double radius) {
  const int n = static_cast<int>(px.size());
  std::vector<std::uint8_t> visible(n, 1);
  for (int k = 0; k < n; ++k) {
    for (const auto& [a, b] : skeleton.edges) {
      if (a == k || b == k) continue;
      const Vec2 seg = px[b] - px[a];
      const double len2 = seg.dot(seg);
      double t = 0.0;
      if (len2 > 0.0) {
        t = std::clamp((px[k] - px[a]).dot(seg) / len2, 0.0, 1.0);
      }
      const Vec2 closest = px[a] + seg * t;
      if (dist(closest, px[k]) > radius) continue;
      const double seg_depth = depth[a] + (depth[b] - depth[a]) * t;
      if (seg_depth < depth[k]) {
        visible[k] = 0;
        break;
      }
    }
  }
  return visible;
}

}  // namespace detail

// Projects a camera-oriented, torso-centered pose into the normalized frame:
// the torso center lands on the image center and the joint bounding box is
// scaled to touch the configured margin. Visibility flags come from the
// bone-proximity occlusion test.
inline Pose2D project_oriented(const Pose3D& oriented,
                               const SkeletonModel& skeleton,
                               const Camera& cam,
                               const ProjectionConfig& cfg = {}) {
  const int n = oriented.joint_count();
  const double ratio = cam.focal / cam.subject_distance;
  std::vector<Vec2> raw(n);
  std::vector<double> depth(n);
  double extent = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec3& p = oriented.coords[k];
    depth[k] = cam.subject_distance + p.z;
    if (depth[k] <= 0.0)
      throw projection_error("joint behind camera");
    raw[k] = {ratio * p.x, ratio * p.y};
    extent = std::max({extent, std::abs(raw[k].x), std::abs(raw[k].y)});
  }
  const double half = cfg.frame / 2.0;
  const double scale = extent > 1e-12 ? (half - cfg.margin) / extent : 1.0;
  Pose2D out;
  out.coords.resize(n);
  for (int k = 0; k < n; ++k) {
    out.coords[k] = {half + scale * raw[k].x, half + scale * raw[k].y};
  }
  out.visible =
      detail::occlusion_flags(out.coords, depth, skeleton, cfg.occlusion_radius);
  return out;
}

inline Pose2D project(const Pose3D& pose, const Camera& cam,
                      const SkeletonModel& skeleton,
                      const ProjectionConfig& cfg = {}) {
  return project_oriented(orient_pose(pose, cam), skeleton, cam, cfg);
}

inline std::vector<std::uint8_t> visible_joints(const Pose3D& pose,
                                                const Camera& cam,
                                                const SkeletonModel& skeleton,
                                                const ProjectionConfig& cfg = {}) {
  return project(pose, cam, skeleton, cfg).visible;
}

}  // namespace posemosaic
