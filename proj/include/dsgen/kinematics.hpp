#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "dsgen/geometry.hpp"

namespace dsgen {

inline constexpr int kNumJoints = 7;

using JointVector = Eigen::Matrix<double, kNumJoints, 1>;
using Jacobian = Eigen::Matrix<double, 6, kNumJoints>;

/// Standard Denavit-Hartenberg row:
/// T = RotZ(theta_offset + q) * TransZ(d) * TransX(a) * RotX(alpha).
struct DhRow {
  double a = 0.0;             // link length, m
  double alpha = 0.0;         // link twist, rad
  double d = 0.0;             // link offset, m
  double theta_offset = 0.0;  // joint angle offset, rad
};

struct KinematicChain {
  std::array<DhRow, kNumJoints> rows{};
  std::array<double, kNumJoints> lower{};        // joint limits, rad
  std::array<double, kNumJoints> upper{};
  std::array<double, kNumJoints> link_radius{};  // collision capsule radii, m

  void check_limits(const JointVector& q) const {
    for (int i = 0; i < kNumJoints; ++i) {
      if (q[i] < lower[i] || q[i] > upper[i]) {
        throw JointLimitViolation("joint " + std::to_string(i + 1) +
                                  " out of limits: " + std::to_string(q[i]));
      }
    }
  }

  bool within_limits(const JointVector& q) const {
    for (int i = 0; i < kNumJoints; ++i) {
      if (q[i] < lower[i] || q[i] > upper[i]) return false;
    }
    return true;
  }

  JointVector clamp_to_limits(const JointVector& q) const {
    JointVector out = q;
    for (int i = 0; i < kNumJoints; ++i) {
      out[i] = std::clamp(out[i], lower[i], upper[i]);
    }
    return out;
  }

  JointVector mid_range() const {
    JointVector out;
    for (int i = 0; i < kNumJoints; ++i) out[i] = 0.5 * (lower[i] + upper[i]);
    return out;
  }

  /// Upper bound on flange distance from base (sum of DH translations).
  double reach() const {
    double r = 0.0;
    for (const auto& row : rows) r += std::hypot(row.a, row.d);
    return r;
  }
};

/// Generic 7-DOF arm with alternating joint axes. Dimensions are config
/// defaults, not a calibrated model of any specific robot.
inline KinematicChain default_chain() {
  using std::numbers::pi;
  KinematicChain c;
  const double deg = pi / 180.0;
  c.rows = {{{0.0, -pi / 2, 0.340, 0.0},
             {0.0, pi / 2, 0.0, 0.0},
             {0.0, pi / 2, 0.400, 0.0},
             {0.0, -pi / 2, 0.0, 0.0},
             {0.0, -pi / 2, 0.400, 0.0},
             {0.0, pi / 2, 0.0, 0.0},
             {0.0, 0.0, 0.126, 0.0}}};
  const std::array<double, kNumJoints> lim = {170 * deg, 120 * deg, 170 * deg,
                                              120 * deg, 170 * deg, 120 * deg,
                                              175 * deg};
  for (int i = 0; i < kNumJoints; ++i) {
    c.lower[i] = -lim[i];
    c.upper[i] = lim[i];
  }
  c.link_radius = {0.095, 0.090, 0.080, 0.075, 0.065, 0.055, 0.040};
  return c;
}

/// Frame of each joint along the chain: entry 0 is the base, entry i the
/// frame after applying rows 0..i-1. Rotations stay orthonormal to working
/// precision over 7 products; no per-step renormalization needed here.
struct FramePath {
  std::array<Mat3, kNumJoints + 1> rotation;
  std::array<Vec3, kNumJoints + 1> origin;
};

inline Mat3 dh_rotation(const DhRow& row, double q) {
  return rot_z(row.theta_offset + q) * rot_x(row.alpha);
}

inline Vec3 dh_translation(const DhRow& row, double q) {
  const double th = row.theta_offset + q;
  return {row.a * std::cos(th), row.a * std::sin(th), row.d};
}

inline FramePath chain_frames(const KinematicChain& chain, const JointVector& q) {
  chain.check_limits(q);
  FramePath f;
  f.rotation[0] = Mat3::Identity();
  f.origin[0] = Vec3::Zero();
  for (int i = 0; i < kNumJoints; ++i) {
    f.origin[i + 1] = f.origin[i] + f.rotation[i] * dh_translation(chain.rows[i], q[i]);
    f.rotation[i + 1] = f.rotation[i] * dh_rotation(chain.rows[i], q[i]);
  }
  return f;
}

/// Pose of the flange expressed in the base frame.
inline RigidTransform forward_kinematics(const KinematicChain& chain,
                                         const JointVector& q) {
  const FramePath f = chain_frames(chain, q);
  return {orthonormalized(f.rotation[kNumJoints]), f.origin[kNumJoints],
          "flange", "base"};
}

/// Geometric Jacobian of the flange point: rows 0-2 linear, rows 3-5 angular
/// velocity per unit joint velocity, base frame.
inline Jacobian jacobian(const KinematicChain& chain, const JointVector& q) {
  const FramePath f = chain_frames(chain, q);
  const Vec3 p_end = f.origin[kNumJoints];
  Jacobian j;
  for (int i = 0; i < kNumJoints; ++i) {
    const Vec3 axis = f.rotation[i].col(2);  // joint i rotates about local z
    j.block<3, 1>(0, i) = axis.cross(p_end - f.origin[i]);
    j.block<3, 1>(3, i) = axis;
  }
  return j;
}

struct IkParams {
  double damping = 1e-3;        // DLS lambda
  int max_iterations = 200;
  double step_clamp = 0.2;      // rad, per joint per iteration
  double nullspace_gain = 0.1;  // pull toward mid-range in the nullspace
  double position_tol = 1e-9;   // internal convergence target, m
  double rotation_tol = 1e-9;   // internal convergence target, rad
};

/// Damped-least-squares IK with a nullspace bias toward mid-range.
/// The returned configuration reproduces `target` under FK within
/// 1e-6 m / 1e-6 rad or NoConvergence is thrown.
inline JointVector inverse_kinematics(const KinematicChain& chain,
                                      const RigidTransform& target,
                                      const JointVector& seed,
                                      const IkParams& params = {}) {
  constexpr double kPostTolPos = 1e-6;
  constexpr double kPostTolRot = 1e-6;

  JointVector q = chain.clamp_to_limits(seed);
  const JointVector mid = chain.mid_range();

  auto error_twist = [&](const JointVector& qi) {
    const FramePath f = chain_frames(chain, qi);
    Eigen::Matrix<double, 6, 1> e;
    e.head<3>() = target.translation - f.origin[kNumJoints];
    e.tail<3>() = rotation_log(target.rotation *
                               f.rotation[kNumJoints].transpose());
    return e;
  };

  Eigen::Matrix<double, 6, 1> e = error_twist(q);
  double lambda = params.damping;
  for (int iter = 0; iter < params.max_iterations; ++iter) {
    if (e.head<3>().norm() <= params.position_tol &&
        e.tail<3>().norm() <= params.rotation_tol) {
      break;
    }
    const Jacobian j = jacobian(chain, q);

    // Damped step; damping escalates while the step does not reduce the
    // residual (Levenberg-Marquardt style), recovering from stalls near
    // singular or limit-blocked configurations.
    bool accepted = false;
    for (int attempt = 0; attempt < 10 && !accepted; ++attempt) {
      const Eigen::Matrix<double, 6, 6> jjt =
          j * j.transpose() + lambda * lambda * Eigen::Matrix<double, 6, 6>::Identity();
      const auto solver = jjt.ldlt();
      JointVector dq = j.transpose() * solver.solve(e);

      // Redundancy resolution on first-try steps only: pull toward mid-range
      // in the nullspace, faded out near convergence so the secondary
      // objective cannot stall the primary one.
      const double fade = std::min(1.0, e.norm() / 1e-3);
      if (attempt == 0 && fade > 0.0) {
        const Eigen::Matrix<double, kNumJoints, 6> j_pinv =
            j.transpose() * jjt.inverse();
        const Eigen::Matrix<double, kNumJoints, kNumJoints> null_proj =
            Eigen::Matrix<double, kNumJoints, kNumJoints>::Identity() - j_pinv * j;
        dq += null_proj * (fade * params.nullspace_gain * (mid - q));
      }

      for (int i = 0; i < kNumJoints; ++i) {
        dq[i] = std::clamp(dq[i], -params.step_clamp, params.step_clamp);
      }
      const JointVector q_try = chain.clamp_to_limits(q + dq);
      const Eigen::Matrix<double, 6, 1> e_try = error_twist(q_try);
      if (e_try.norm() < e.norm()) {
        q = q_try;
        e = e_try;
        lambda = std::max(params.damping, lambda * 0.5);
        accepted = true;
      } else {
        lambda *= 8.0;
      }
    }
    if (!accepted) break;  // stalled; residual check below decides
  }

  if (e.head<3>().norm() > kPostTolPos || e.tail<3>().norm() > kPostTolRot) {
    throw NoConvergence("inverse_kinematics: no convergence, residual " +
                        std::to_string(e.head<3>().norm()) + " m / " +
                        std::to_string(e.tail<3>().norm()) + " rad");
  }
  return q;
}

}  // namespace dsgen
