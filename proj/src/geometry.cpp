#include "arcroll/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace arcroll {

namespace {

constexpr double kSmallAngle = 1e-8;
constexpr double kParallelTol = 1e-12;
constexpr double kUnitTol = 1e-9;

}  // namespace

Mat3 hat3(const Vec3& w) {
  Mat3 m;
  m << 0.0, -w.z(), w.y(),
       w.z(), 0.0, -w.x(),
       -w.y(), w.x(), 0.0;
  return m;
}

Vec3 vee3(const Mat3& m) { return {m(2, 1), m(0, 2), m(1, 0)}; }

Rotation3 Rotation3::from_matrix(const Mat3& m, double tol) {
  if (!m.allFinite()) {
    throw std::invalid_argument("rotation matrix has non-finite entries");
  }
  if ((m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("rotation matrix is not orthonormal");
  }
  if (std::abs(m.determinant() - 1.0) > tol) {
    throw std::invalid_argument("rotation matrix has determinant != +1");
  }
  return Rotation3(m);
}

Rotation3 Rotation3::from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("rotation axis must be a finite non-zero vector");
  }
  const Mat3 u = hat3(axis / n);
  return Rotation3(Mat3::Identity() + std::sin(angle) * u + (1.0 - std::cos(angle)) * u * u);
}

double Rotation3::angle() const {
  const double s = 0.5 * vee3(m_ - m_.transpose()).norm();
  const double c = 0.5 * (m_.trace() - 1.0);
  return std::atan2(s, c);
}

double rotation_distance(const Rotation3& a, const Rotation3& b) {
  return (a.transpose() * b).angle();
}

Vec4 Transform3::apply(const Vec4& h) const {
  Vec4 out;
  out.head<3>() = rotation * h.head<3>() + h.w() * translation;
  out.w() = h.w();
  return out;
}

Mat4 Transform3::matrix() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rotation.matrix();
  m.topRightCorner<3, 1>() = translation;
  return m;
}

Transform3 exp_screw(const Screw& xi) {
  const double theta = xi.angular.norm();
  const Mat3 w = hat3(xi.angular);
  const Mat3 w2 = w * w;

  // Coefficients of w and w^2 in the rotation (a, b) and in the left Jacobian (b, c).
  double a, b, c;
  if (theta < kSmallAngle) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0;
    b = 0.5 - t2 / 24.0;
    c = 1.0 / 6.0 - t2 / 120.0;
  } else {
    const double t2 = theta * theta;
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / t2;
    c = (theta - std::sin(theta)) / (t2 * theta);
  }

  const Mat3 r = Mat3::Identity() + a * w + b * w2;
  const Mat3 v = Mat3::Identity() + b * w + c * w2;
  Transform3 out;
  out.rotation = Rotation3::from_matrix(r, 1e-9);
  out.translation = v * xi.linear;
  return out;
}

Rotation3 rotation_between(const Vec3& from, const Vec3& to) {
  if (std::abs(from.norm() - 1.0) > kUnitTol || std::abs(to.norm() - 1.0) > kUnitTol) {
    throw std::invalid_argument("rotation_between expects unit vectors");
  }
  const Vec3 axis = from.cross(to);
  const double s = axis.norm();
  const double c = from.dot(to);
  if (s < kParallelTol) {
    if (c > 0.0) {
      return Rotation3::identity();
    }
    // Half turn about the x-axis, projected off `from` in case `from` is not vertical.
    Vec3 h = Vec3::UnitX() - from.dot(Vec3::UnitX()) * from;
    if (h.norm() < 1e-6) {
      h = Vec3::UnitY() - from.dot(Vec3::UnitY()) * from;
    }
    return Rotation3::from_axis_angle(h, kPi);
  }
  return Rotation3::from_axis_angle(axis / s, std::atan2(s, c));
}

}  // namespace arcroll
