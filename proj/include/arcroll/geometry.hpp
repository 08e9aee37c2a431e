#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <numbers>

namespace arcroll {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Skew-symmetric matrix such that hat3(w) * u == w.cross(u).
Mat3 hat3(const Vec3& w);
Vec3 vee3(const Mat3& m);

/// Element of SO(3). Construction through from_matrix() checks
/// orthonormality and orientation; the factories build valid rotations.
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::Identity()) {}

  static Rotation3 identity() { return {}; }
  static Rotation3 from_matrix(const Mat3& m, double tol = 1e-10);
  // Rodrigues: I + sin(a) u^ + (1 - cos(a)) u^2, axis normalized internally.
  static Rotation3 from_axis_angle(const Vec3& axis, double angle);

  const Mat3& matrix() const { return m_; }
  Rotation3 transpose() const { return Rotation3(m_.transpose()); }
  Rotation3 inverse() const { return transpose(); }

  // Rotation angle in [0, pi], computed with atan2 so small angles keep precision.
  double angle() const;

  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Rotation3 operator*(const Rotation3& o) const { return Rotation3(m_ * o.m_); }

 private:
  explicit Rotation3(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

// Angle of the relative rotation a^T b.
double rotation_distance(const Rotation3& a, const Rotation3& b);

/// Rigid transform acting on points as v1 = translation + rotation * v2.
struct Transform3 {
  Rotation3 rotation;
  Vec3 translation = Vec3::Zero();

  static Transform3 identity() { return {}; }

  Vec3 apply_point(const Vec3& p) const { return translation + rotation * p; }
  Vec3 apply_vector(const Vec3& v) const { return rotation * v; }
  Vec4 apply(const Vec4& h) const;

  Transform3 operator*(const Transform3& o) const {
    return {rotation * o.rotation, translation + rotation * o.translation};
  }
  Transform3 inverse() const {
    Rotation3 rt = rotation.transpose();
    return {rt, -(rt * translation)};
  }
  Mat4 matrix() const;
};

/// Twist coordinates xi = [angular; linear].
struct Screw {
  Vec3 angular = Vec3::Zero();
  Vec3 linear = Vec3::Zero();

  Screw operator-() const { return {-angular, -linear}; }
};

// SE(3) exponential of the twist matrix built from xi.
Transform3 exp_screw(const Screw& xi);

// Rotation R with R * from == to, about the axis from x to (Rodrigues).
// Parallel inputs give the identity; antipodal inputs give a half turn about
// a horizontal axis (the x-axis when `to` is the z-axis).
Rotation3 rotation_between(const Vec3& from, const Vec3& to);

}  // namespace arcroll
