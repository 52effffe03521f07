#pragma once

#include <Eigen/Dense>
#include <string>

#include "dsgen/error.hpp"

namespace dsgen {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline Mat3 rot_x(double a) {
  return Eigen::AngleAxisd(a, Vec3::UnitX()).toRotationMatrix();
}
inline Mat3 rot_y(double a) {
  return Eigen::AngleAxisd(a, Vec3::UnitY()).toRotationMatrix();
}
inline Mat3 rot_z(double a) {
  return Eigen::AngleAxisd(a, Vec3::UnitZ()).toRotationMatrix();
}

/// Nearest rotation matrix (polar factor) with det +1.
inline Mat3 orthonormalized(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  if ((u * svd.matrixV().transpose()).determinant() < 0.0) u.col(2) *= -1.0;
  return u * svd.matrixV().transpose();
}

/// Angle of a rotation matrix, in [0, pi].
inline double rotation_angle(const Mat3& r) {
  const double c = std::clamp((r.trace() - 1.0) * 0.5, -1.0, 1.0);
  return std::acos(c);
}

/// Axis-angle vector (angle * unit axis) of a rotation matrix.
inline Vec3 rotation_log(const Mat3& r) {
  Eigen::AngleAxisd aa(r);
  return aa.angle() * aa.axis();
}

/// SE(3) transform mapping points expressed in `from_frame` coordinates into
/// `to_frame` coordinates: x_to = rotation * x_from + translation.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();
  std::string from_frame;
  std::string to_frame;

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
};

inline RigidTransform identity_transform(const std::string& frame) {
  return {Mat3::Identity(), Vec3::Zero(), frame, frame};
}

inline RigidTransform make_transform(const Mat3& r, const Vec3& t,
                                     const std::string& from,
                                     const std::string& to) {
  return {r, t, from, to};
}

inline RigidTransform translation_transform(const Vec3& t,
                                            const std::string& from = "",
                                            const std::string& to = "") {
  return {Mat3::Identity(), t, from, to};
}

/// a after b: maps b.from_frame into a.to_frame. Frame tags must agree.
/// The rotation is re-orthonormalized so arbitrarily long chains keep
/// ||R^T R - I||_inf below 1e-9.
inline RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  if (a.from_frame != b.to_frame) {
    throw FrameMismatch("compose: frame mismatch, \"" + a.from_frame +
                        "\" vs \"" + b.to_frame + "\"");
  }
  RigidTransform out;
  out.rotation = orthonormalized(a.rotation * b.rotation);
  out.translation = a.rotation * b.translation + a.translation;
  out.from_frame = b.from_frame;
  out.to_frame = a.to_frame;
  return out;
}

inline RigidTransform invert(const RigidTransform& t) {
  RigidTransform out;
  out.rotation = t.rotation.transpose();
  out.translation = -(t.rotation.transpose() * t.translation);
  out.from_frame = t.to_frame;
  out.to_frame = t.from_frame;
  return out;
}

/// Max absolute entry of R^T R - I; the orthonormality defect.
inline double orthonormality_defect(const Mat3& r) {
  return (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace dsgen
