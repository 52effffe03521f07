#pragma once

#include <vector>

#include "dsgen/geometry.hpp"

namespace dsgen {

/// One simulated contact event: the flange pose at the instant the tool tip
/// touched the plane n . x = d (base frame).
struct ContactObservation {
  RigidTransform flange_pose;  // flange -> base
  Vec3 plane_normal;           // unit, base frame
  double plane_offset = 0.0;   // m

  static ContactObservation make(const RigidTransform& pose, const Vec3& normal,
                                 double offset) {
    if (std::abs(normal.norm() - 1.0) > 1e-9) {
      throw Error("ContactObservation: plane normal must be unit length");
    }
    return {pose, normal, offset};
  }
};

/// Tool tip expressed in the flange frame. The axis is pinned to the flange
/// z-axis (the tool is mounted orthogonal to the holder) and is not estimated.
struct ToolOffset {
  Vec3 tip_offset = Vec3::Zero();  // m, flange frame
  Vec3 axis = Vec3::UnitZ();       // unit, flange frame
};

struct CalibrationResult {
  ToolOffset tool;
  double residual_rms = 0.0;  // m
};

/// Tip position in the base frame for a given flange pose.
inline Vec3 tool_tip_position(const RigidTransform& flange_pose,
                              const ToolOffset& tool) {
  return flange_pose.apply(tool.tip_offset);
}

/// Least-squares tip offset from contact reaches: each observation i against
/// plane (n, d) contributes one row  n^T R_i t = d - n^T p_i.
inline CalibrationResult calibrate_tool(
    const std::vector<ContactObservation>& observations) {
  const int n = static_cast<int>(observations.size());
  if (n < 3) {
    throw Error("calibrate_tool: need at least 3 contact observations, got " +
                std::to_string(n));
  }
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    const auto& obs = observations[i];
    a.row(i) = (obs.plane_normal.transpose() * obs.flange_pose.rotation);
    b[i] = obs.plane_offset - obs.plane_normal.dot(obs.flange_pose.translation);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv[2] < 1e-8 * sv[0] || sv[2] < 1e-12) {
    throw RankDeficient(
        "calibrate_tool: contact normals span fewer than 3 dimensions");
  }

  CalibrationResult result;
  result.tool.tip_offset = svd.solve(b);
  result.tool.axis = Vec3::UnitZ();
  result.residual_rms = std::sqrt((a * result.tool.tip_offset - b).squaredNorm() / n);
  return result;
}

}  // namespace dsgen
