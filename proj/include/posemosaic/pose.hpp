#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "posemosaic/errors.hpp"
#include "posemosaic/skeleton.hpp"
#include "posemosaic/vec.hpp"

namespace posemosaic {

constexpr int kFrameSize = 220;

// 2D joint positions in the normalized 220x220 frame, with per-joint
// self-occlusion flags.
struct Pose2D {
  std::vector<Vec2> coords;
  std::vector<std::uint8_t> visible;

  int joint_count() const { return static_cast<int>(coords.size()); }
  bool all_visible() const {
    return std::all_of(visible.begin(), visible.end(),
                       [](std::uint8_t v) { return v != 0; });
  }

  static Pose2D make(std::vector<Vec2> pts) {
    Pose2D p;
    p.visible.assign(pts.size(), 1);
    p.coords = std::move(pts);
    return p;
  }
};

// 3D joint positions in millimeters, torso-centered.
struct Pose3D {
  std::vector<Vec3> coords;

  int joint_count() const { return static_cast<int>(coords.size()); }
};

inline Vec3 torso_center(const Pose3D& pose, const SkeletonModel& skeleton) {
  Vec3 c;
  for (int t : skeleton.torso_joints) c += pose.coords[t];
  return c * 0.25;
}

inline Vec2 torso_center(const Pose2D& pose, const SkeletonModel& skeleton) {
  Vec2 c;
  for (int t : skeleton.torso_joints) c += pose.coords[t];
  return c * 0.25;
}

// Shifts the pose so the torso center sits at the origin.
inline Pose3D center_torso(Pose3D pose, const SkeletonModel& skeleton) {
  const Vec3 c = torso_center(pose, skeleton);
  for (auto& p : pose.coords) p = p - c;
  return pose;
}

// Direct-isometry similarity: x -> scale * R * x + translation.
struct SimilarityTransform2D {
  std::array<double, 4> rotation{1.0, 0.0, 0.0, 1.0};  // row-major 2x2
  double scale = 1.0;
  Vec2 translation;

  Vec2 apply(const Vec2& v) const {
    return {scale * (rotation[0] * v.x + rotation[1] * v.y) + translation.x,
            scale * (rotation[2] * v.x + rotation[3] * v.y) + translation.y};
  }

  SimilarityTransform2D inverse() const {
    SimilarityTransform2D inv;
    inv.scale = 1.0 / scale;
    // R^T for an orthonormal rotation.
    inv.rotation = {rotation[0], rotation[2], rotation[1], rotation[3]};
    const Vec2 rt{inv.rotation[0] * translation.x + inv.rotation[1] * translation.y,
                  inv.rotation[2] * translation.x + inv.rotation[3] * translation.y};
    inv.translation = rt * -inv.scale;
    return inv;
  }

  static SimilarityTransform2D identity() { return {}; }

  static SimilarityTransform2D from_angle(double radians, double scale,
                                          Vec2 translation) {
    SimilarityTransform2D t;
    const double c = std::cos(radians), s = std::sin(radians);
    t.rotation = {c, -s, s, c};
    t.scale = scale;
    t.translation = translation;
    return t;
  }

  Pose2D apply(const Pose2D& pose) const {
    Pose2D out = pose;
    for (auto& p : out.coords) p = apply(p);
    return out;
  }
};

// Among the joints sharing a bone with j, the one farthest from p_j in 2D.
// Ties resolve to the lowest joint index.
inline int farthest_connected_joint(const SkeletonModel& skeleton,
                                    const Pose2D& p, int j) {
  int best = -1;
  double best_d = -1.0;
  for (const auto& [a, b] : skeleton.edges) {
    int other = -1;
    if (a == j) other = b;
    else if (b == j) other = a;
    if (other < 0) continue;
    const double d = dist(p.coords[j], p.coords[other]);
    if (d > best_d || (d == best_d && other < best)) {
      best_d = d;
      best = other;
    }
  }
  if (best < 0)
    throw degenerate_geometry_error("joint has no neighbors in skeleton");
  return best;
}

// Similarity transform pinning q_j onto p_j and q_i onto p_i exactly:
// translation from the j correspondence, rotation plus uniform scale from
// the i correspondence. Throws if the j-i limb of q has zero length.
inline SimilarityTransform2D align_transform(const Pose2D& q, const Pose2D& p,
                                             int j, int i) {
  const Vec2 limb_q = q.coords[i] - q.coords[j];
  const Vec2 limb_p = p.coords[i] - p.coords[j];
  const double len_q = limb_q.norm();
  const double len_p = limb_p.norm();
  if (len_q <= 0.0)
    throw degenerate_limb_error("zero-length limb in pose to align");
  SimilarityTransform2D t;
  if (len_p <= 0.0) {
    // Target limb collapsed; both constraints coincide, so only translate.
    t.translation = p.coords[j] - q.coords[j];
    return t;
  }
  t.scale = len_p / len_q;
  const double angle =
      std::atan2(limb_p.y, limb_p.x) - std::atan2(limb_q.y, limb_q.x);
  const double c = std::cos(angle), s = std::sin(angle);
  t.rotation = {c, -s, s, c};
  const Vec2 rotated_j{t.scale * (c * q.coords[j].x - s * q.coords[j].y),
                       t.scale * (s * q.coords[j].x + c * q.coords[j].y)};
  t.translation = p.coords[j] - rotated_j;
  return t;
}

// Translation-only fallback used when the limb of q is degenerate.
inline SimilarityTransform2D translation_transform(const Pose2D& q,
                                                   const Pose2D& p, int j) {
  SimilarityTransform2D t;
  t.translation = p.coords[j] - q.coords[j];
  return t;
}

inline std::pair<SimilarityTransform2D, Pose2D> align_pose(const Pose2D& q,
                                                           const Pose2D& p,
                                                           int j, int i) {
  const SimilarityTransform2D t = align_transform(q, p, j, i);
  return {t, t.apply(q)};
}

// Inverse-distance weights of Eq-style joint conditioning: w_k proportional
// to 1/d(p_k, p_j), normalized to sum 1 over k != j; the query joint itself
// gets weight 0 (its residual vanishes by construction). Joints coinciding
// with p_j are given the substitute distance `coincident_eps`.
inline std::vector<double> joint_weights(const Pose2D& p, int j,
                                         double coincident_eps = 1e-3) {
  const int n = p.joint_count();
  std::vector<double> w(n, 0.0);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    double d = dist(p.coords[k], p.coords[j]);
    if (d <= 0.0) d = coincident_eps;
    w[k] = 1.0 / d;
    total += w[k];
  }
  if (total > 0.0) {
    for (double& x : w) x /= total;
  }
  return w;
}

namespace detail {

// Weights restricted and renormalized to the joint subset `included`.
inline std::vector<double> subset_weights(const Pose2D& p, int j,
                                          const std::vector<std::uint8_t>& included,
                                          double coincident_eps = 1e-3) {
  const int n = p.joint_count();
  std::vector<double> w(n, 0.0);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == j || !included[k]) continue;
    double d = dist(p.coords[k], p.coords[j]);
    if (d <= 0.0) d = coincident_eps;
    w[k] = 1.0 / d;
    total += w[k];
  }
  if (total > 0.0) {
    for (double& x : w) x /= total;
  }
  return w;
}

}  // namespace detail

// Alignment-conditioned weighted pose distance. q is aligned so that its
// joint j and the farthest neighbor i of j (in p) pin onto p, then visible
// joints of q accumulate (w_k(p) + w_k(q)) * d(p_k, q'_k) with both weight
// vectors renormalized over q's visible joints.
inline double pose_distance(const Pose2D& p, const Pose2D& q, int j,
                            const SkeletonModel& skeleton) {
  const int i = farthest_connected_joint(skeleton, p, j);
  SimilarityTransform2D t;
  const double limb_q = dist(q.coords[i], q.coords[j]);
  if (limb_q > 0.0) {
    t = align_transform(q, p, j, i);
  } else {
    t = translation_transform(q, p, j);
  }
  const int n = p.joint_count();
  const auto wp = detail::subset_weights(p, j, q.visible);
  const auto wq = detail::subset_weights(q, j, q.visible);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == j || !q.visible[k]) continue;
    total += (wp[k] + wq[k]) * dist(p.coords[k], t.apply(q.coords[k]));
  }
  return total;
}

// x -> width-1-x with left/right joints swapped. Applying twice is the
// identity on any value this function has produced.
inline Pose2D mirror(const Pose2D& pose, const SkeletonModel& skeleton,
                     int width = kFrameSize) {
  const int n = pose.joint_count();
  Pose2D out;
  out.coords.resize(n);
  out.visible.resize(n);
  const double w1 = static_cast<double>(width - 1);
  for (int k = 0; k < n; ++k) {
    const int src = skeleton.mirrored_joint(k);
    out.coords[k] = {w1 - pose.coords[src].x, pose.coords[src].y};
    out.visible[k] = pose.visible[src];
  }
  return out;
}

}  // namespace posemosaic
