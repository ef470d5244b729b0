#pragma once

#include <array>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "posemosaic/errors.hpp"

namespace posemosaic {

// Joint names, bone connectivity and left/right pairing. Bones must form a
// connected tree over all joints.
struct SkeletonModel {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> lr_pairs;
  // Two shoulders and two hips; their mean is the torso center.
  std::array<int, 4> torso_joints{};

  int joint_count() const { return static_cast<int>(names.size()); }

  std::vector<int> neighbors(int joint) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
      if (a == joint) out.push_back(b);
      if (b == joint) out.push_back(a);
    }
    return out;
  }

  // Index of the left/right counterpart, or the joint itself if unpaired.
  int mirrored_joint(int joint) const {
    for (const auto& [l, r] : lr_pairs) {
      if (l == joint) return r;
      if (r == joint) return l;
    }
    return joint;
  }

  void validate() const;
};

inline void SkeletonModel::validate() const {
  const int n = joint_count();
  if (n < 2) throw config_error("skeleton needs at least 2 joints");
  if (static_cast<int>(edges.size()) != n - 1)
    throw config_error("skeleton edges must form a tree (need n-1 edges)");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw config_error("skeleton edge references invalid joint");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Connectivity; together with the edge count this implies acyclicity.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  if (visited != n) throw config_error("skeleton edges are not connected");

  std::vector<char> paired(n, 0);
  for (const auto& [l, r] : lr_pairs) {
    if (l < 0 || l >= n || r < 0 || r >= n || l == r)
      throw config_error("lr_pair references invalid joint");
    if (paired[l] || paired[r])
      throw config_error("joint appears in more than one lr_pair");
    paired[l] = paired[r] = 1;
  }
  for (int t : torso_joints) {
    if (t < 0 || t >= n) throw config_error("torso joint index out of range");
  }
}

// 13-joint skeleton: head, shoulders, elbows, wrists, hips, knees, ankles.
inline SkeletonModel default_skeleton13() {
  SkeletonModel s;
  s.names = {"head",       "l_shoulder", "r_shoulder", "l_elbow", "r_elbow",
             "l_wrist",    "r_wrist",    "l_hip",      "r_hip",   "l_knee",
             "r_knee",     "l_ankle",    "r_ankle"};
  s.edges = {{0, 1}, {0, 2},  {1, 3},  {3, 5},  {2, 4},  {4, 6},
             {1, 7}, {2, 8},  {7, 9},  {9, 11}, {8, 10}, {10, 12}};
  s.lr_pairs = {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}};
  s.torso_joints = {1, 2, 7, 8};
  s.validate();
  return s;
}

inline nlohmann::json skeleton_to_json(const SkeletonModel& s) {
  nlohmann::json j;
  j["names"] = s.names;
  j["edges"] = s.edges;
  j["lr_pairs"] = s.lr_pairs;
  j["torso_joints"] = s.torso_joints;
  return j;
}

inline SkeletonModel skeleton_from_json(const nlohmann::json& j) {
  SkeletonModel s;
  s.names = j.at("names").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges"))
    s.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  for (const auto& p : j.at("lr_pairs"))
    s.lr_pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  const auto t = j.at("torso_joints");
  if (t.size() != 4) throw config_error("torso_joints must list 4 joints");
  for (int i = 0; i < 4; ++i) s.torso_joints[i] = t.at(i).get<int>();
  s.validate();
  return s;
}

inline SkeletonModel load_skeleton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open skeleton file: " + path);
  nlohmann::json j;
  try {
    in >> j;
    return skeleton_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("bad skeleton file " + path + ": " + e.what());
  }
}

inline void save_skeleton(const std::string& path, const SkeletonModel& s) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write skeleton file: " + path);
  out << skeleton_to_json(s).dump(2) << "\n";
}

}  // namespace posemosaic
