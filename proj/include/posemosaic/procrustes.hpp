#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "posemosaic/errors.hpp"
#include "posemosaic/pose.hpp"
#include "posemosaic/vec.hpp"

namespace posemosaic {

struct RigidAlignment {
  std::array<double, 9> rotation{1, 0, 0, 0, 1, 0, 0, 0, 1};  // row-major 3x3
  Vec3 translation;
  double mean_error_mm = 0.0;

  Vec3 apply(const Vec3& v) const {
    return {rotation[0] * v.x + rotation[1] * v.y + rotation[2] * v.z + translation.x,
            rotation[3] * v.x + rotation[4] * v.y + rotation[5] * v.z + translation.y,
            rotation[6] * v.x + rotation[7] * v.y + rotation[8] * v.z + translation.z};
  }
};

// Least-squares rotation + translation (no scale, no reflection) taking a
// onto b; reports the mean per-joint residual in mm after alignment.
inline RigidAlignment procrustes_rigid(const Pose3D& a, const Pose3D& b) {
  const int n = a.joint_count();
  if (n < 3 || b.joint_count() != n)
    throw degenerate_geometry_error("procrustes needs >= 3 paired joints");

  Eigen::Vector3d ca = Eigen::Vector3d::Zero(), cb = Eigen::Vector3d::Zero();
  for (int k = 0; k < n; ++k) {
    ca += Eigen::Vector3d(a.coords[k].x, a.coords[k].y, a.coords[k].z);
    cb += Eigen::Vector3d(b.coords[k].x, b.coords[k].y, b.coords[k].z);
  }
  ca /= n;
  cb /= n;

  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  double spread = 0.0;
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector3d pa =
        Eigen::Vector3d(a.coords[k].x, a.coords[k].y, a.coords[k].z) - ca;
    const Eigen::Vector3d pb =
        Eigen::Vector3d(b.coords[k].x, b.coords[k].y, b.coords[k].z) - cb;
    h += pa * pb.transpose();
    spread += pa.squaredNorm();
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Rank < 2 means the configuration is collinear (or a point): the
  // in-plane rotation is unconstrained.
  if (spread <= 0.0 || sv(1) <= 1e-9 * std::max(sv(0), 1.0))
    throw degenerate_geometry_error("collinear joint configuration");

  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  d(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0
                ? -1.0
                : 1.0;
  const Eigen::Matrix3d r = svd.matrixV() * d * svd.matrixU().transpose();
  const Eigen::Vector3d t = cb - r * ca;

  RigidAlignment out;
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col) out.rotation[row * 3 + col] = r(row, col);
  out.translation = {t(0), t(1), t(2)};

  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    total += dist(out.apply(a.coords[k]), b.coords[k]);
  }
  out.mean_error_mm = total / n;
  return out;
}

}  // namespace posemosaic
