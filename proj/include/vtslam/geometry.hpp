#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "vtslam/core.hpp"

namespace vtslam {

using Vector3 = Eigen::Vector3d;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix3 = Eigen::Matrix3d;
using Matrix4 = Eigen::Matrix4d;
using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Quaternion = Eigen::Quaterniond;

// -------------------------------------------------------------------------
// Rigid transforms.
//
// Conventions used throughout:
//   * translations in millimeters, angles in radians (degrees only at
//     reporting boundaries);
//   * 6-vectors (twists, covariance ordering) are [rot_x rot_y rot_z
//     t_x t_y t_z];
//   * a Pose is the pose of the tactile sensor expressed in the object
//     frame; between-measurements are body-frame relative poses a⁻¹·b.
// -------------------------------------------------------------------------

/// An SE(3) element: unit quaternion + translation.
struct Pose {
  Quaternion rotation = Quaternion::Identity();
  Vector3 translation = Vector3::Zero();

  Pose() = default;
  Pose(const Quaternion& q, const Vector3& t) : rotation(q.normalized()), translation(t) {}

  static Pose identity() { return Pose(); }

  Matrix4 matrix() const {
    Matrix4 m = Matrix4::Identity();
    m.topLeftCorner<3, 3>() = rotation.toRotationMatrix();
    m.topRightCorner<3, 1>() = translation;
    return m;
  }
};

/// Tangent-space coordinates of a rigid transform.
struct Twist {
  Vector3 rot = Vector3::Zero();    // axis-angle, radians
  Vector3 trans = Vector3::Zero();  // mm

  Twist() = default;
  Twist(const Vector3& r, const Vector3& t) : rot(r), trans(t) {}
  explicit Twist(const Vector6& v) : rot(v.head<3>()), trans(v.tail<3>()) {}

  Vector6 vec() const {
    Vector6 v;
    v << rot, trans;
    return v;
  }
};

/// In-plane rigid motion {x, y, yaw}; the tactile odometry output space.
struct PlanarPose {
  double x = 0.0;    // mm
  double y = 0.0;    // mm
  double yaw = 0.0;  // radians

  PlanarPose() = default;
  PlanarPose(double x_, double y_, double yaw_) : x(x_), y(y_), yaw(yaw_) {}

  static PlanarPose identity() { return PlanarPose(); }
};

inline Pose compose(const Pose& a, const Pose& b) {
  Quaternion q = a.rotation * b.rotation;
  q.normalize();
  return Pose(q, a.rotation * b.translation + a.translation);
}

inline Pose inverse(const Pose& p) {
  const Quaternion qi = p.rotation.conjugate();
  return Pose(qi, qi * (-p.translation));
}

inline Matrix3 skew(const Vector3& w) {
  Matrix3 s;
  s << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return s;
}

namespace detail {

// Canonical sign for the theta = pi branch of the rotation log: first
// nonzero axis component positive.
inline Vector3 canonicalize_pi_axis(Vector3 axis) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(axis[k]) > 1e-12) {
      if (axis[k] < 0) axis = -axis;
      break;
    }
  }
  return axis;
}

}  // namespace detail

/// Rotation-vector logarithm of a unit quaternion, principal branch
/// (angle in [0, pi]).
inline Vector3 log_rotation(const Quaternion& q_in) {
  Quaternion q = q_in;
  if (q.w() < 0) q.coeffs() = -q.coeffs();
  const double s = q.vec().norm();
  if (s < 1e-14) return 2.0 * q.vec();  // angle ~ 0
  const double angle = 2.0 * std::atan2(s, q.w());
  Vector3 axis = q.vec() / s;
  if (angle > kPi - 1e-9) axis = detail::canonicalize_pi_axis(axis);
  return angle * axis;
}

inline Quaternion exp_rotation(const Vector3& w) {
  const double angle = w.norm();
  if (angle < 1e-14) {
    Quaternion q(1.0, 0.5 * w.x(), 0.5 * w.y(), 0.5 * w.z());
    q.normalize();
    return q;
  }
  const Vector3 axis = w / angle;
  return Quaternion(Eigen::AngleAxisd(angle, axis));
}

/// SE(3) exponential map.
inline Pose exp_map(const Twist& v) {
  const double theta = v.rot.norm();
  const Matrix3 K = skew(v.rot);
  Matrix3 V;
  if (theta < 1e-6) {
    V = Matrix3::Identity() + 0.5 * K + K * K / 6.0;
  } else {
    const double t2 = theta * theta;
    V = Matrix3::Identity() + (1.0 - std::cos(theta)) / t2 * K +
        (theta - std::sin(theta)) / (t2 * theta) * K * K;
  }
  return Pose(exp_rotation(v.rot), V * v.trans);
}

/// SE(3) logarithm, principal branch (rotation angle in [0, pi]).
inline Twist log_map(const Pose& p) {
  const Vector3 w = log_rotation(p.rotation);
  const double theta = w.norm();
  const Matrix3 K = skew(w);
  Matrix3 Vinv;
  if (theta < 1e-6) {
    Vinv = Matrix3::Identity() - 0.5 * K + K * K / 12.0;
  } else {
    // beta = (1 - (theta/2)·cot(theta/2)) / theta², finite at theta = pi.
    const double half = 0.5 * theta;
    const double beta = (1.0 - half * std::cos(half) / std::sin(half)) / (theta * theta);
    Vinv = Matrix3::Identity() - 0.5 * K + beta * K * K;
  }
  return Twist(w, Vinv * p.translation);
}

inline double rotation_angle(const Pose& p) { return log_rotation(p.rotation).norm(); }

/// Evaluation metric pair: translation (mm) and rotation (deg) of a⁻¹·b.
struct PoseError {
  double trans_mm = 0.0;
  double rot_deg = 0.0;
};

inline PoseError pose_error(const Pose& a, const Pose& b) {
  const Pose e = compose(inverse(a), b);
  return {e.translation.norm(), rad_to_deg(rotation_angle(e))};
}

// --- planar (SE(2)) helpers ----------------------------------------------

inline PlanarPose compose_planar(const PlanarPose& a, const PlanarPose& b) {
  const double c = std::cos(a.yaw), s = std::sin(a.yaw);
  return PlanarPose(a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y,
                    wrap_angle(a.yaw + b.yaw));
}

inline PlanarPose inverse_planar(const PlanarPose& p) {
  const double c = std::cos(p.yaw), s = std::sin(p.yaw);
  return PlanarPose(-(c * p.x + s * p.y), -(-s * p.x + c * p.y), wrap_angle(-p.yaw));
}

/// Embed into SE(3): z, roll, pitch exactly zero.
inline Pose lift_to_se3(const PlanarPose& p) {
  const Quaternion q(std::cos(0.5 * p.yaw), 0.0, 0.0, std::sin(0.5 * p.yaw));
  return Pose(q, Vector3(p.x, p.y, 0.0));
}

/// Project a z-axis-rotation pose back to the plane. Exact inverse of
/// lift_to_se3; for general poses it drops z/roll/pitch.
inline PlanarPose project_to_planar(const Pose& p) {
  Quaternion q = p.rotation;
  if (q.w() < 0) q.coeffs() = -q.coeffs();
  return PlanarPose(p.translation.x(), p.translation.y(), wrap_angle(2.0 * std::atan2(q.z(), q.w())));
}

inline Pose rot_z(double yaw) { return lift_to_se3(PlanarPose(0, 0, yaw)); }

inline Pose make_translation(double x, double y, double z) {
  return Pose(Quaternion::Identity(), Vector3(x, y, z));
}

inline bool approx_equal(const Pose& a, const Pose& b, double tol = 1e-9) {
  const PoseError e = pose_error(a, b);
  return e.trans_mm <= tol && deg_to_rad(e.rot_deg) <= tol;
}

}  // namespace vtslam
