#pragma once

#include <stdexcept>
#include <string>

namespace posemosaic {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Limb j-i has zero length in the pose to be aligned.
struct degenerate_limb_error : error {
  using error::error;
};

// A joint coincides with the query joint when computing inverse-distance weights.
struct coincident_joint_error : error {
  using error::error;
};

// Point set is collinear or otherwise rank-deficient.
struct degenerate_geometry_error : error {
  using error::error;
};

struct degenerate_triangulation_error : error {
  using error::error;
};

// No corpus entry is usable for the requested joint.
struct no_candidate_error : error {
  using error::error;
};

struct projection_error : error {
  using error::error;
};

struct cluster_error : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

struct config_error : error {
  using error::error;
};

}  // namespace posemosaic
