#include "arcroll/contact.hpp"

#include <cmath>
#include <string>

namespace arcroll {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_pinned(double phi, const char* name) {
  if (!is_arc_end(phi)) {
    throw std::invalid_argument(std::string(name) + " must be exactly 0 or pi for this case");
  }
}

void require_interior(double phi, const char* name) {
  if (is_arc_end(phi)) {
    throw DegenerateConfiguration(std::string("both contacts on arc ends: ") + name +
                                  " has no tangent");
  }
  if (!(phi > 0.0 && phi < kPi)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, pi]");
  }
}

}  // namespace

Vec3 closed_form_normal(ContactCase c, double phi1, double phi2) {
  if (c == ContactCase::Case1) {
    return -kInvSqrt2 * Vec3(std::cos(phi1), std::sin(phi1), std::cos(phi2));
  }
  return kInvSqrt2 * Vec3(-std::cos(phi1), std::sin(phi2), -std::cos(phi2));
}

SurfaceNormal normal_case1(double phi1, double phi2) {
  require_pinned(phi2, "phi2");
  require_interior(phi1, "phi1");
  return {closed_form_normal(ContactCase::Case1, phi1, phi2), ContactCase::Case1};
}

SurfaceNormal normal_case2(double phi1, double phi2) {
  require_pinned(phi1, "phi1");
  require_interior(phi2, "phi2");
  return {closed_form_normal(ContactCase::Case2, phi1, phi2), ContactCase::Case2};
}

SurfaceNormal constructed_normal(const RobotParams& p, ContactCase c, double phi1, double phi2) {
  const Vec3 q1 = contact_point(p, Link::One, phi1);
  const Vec3 q2 = contact_point(p, Link::Two, phi2);
  const Vec3 n = c == ContactCase::Case1 ? tangent(p, Link::One, phi1).cross(q1 - q2)
                                         : tangent(p, Link::Two, phi2).cross(q2 - q1);
  const double len = n.norm();
  if (!(len > 0.0)) {
    throw DegenerateConfiguration("contact points and tangent are collinear");
  }
  Vec3 z = n / len;
  if (-z.dot(q1) < 0.0) z = -z;
  return {z, c};
}

double case3_residual(double phi1, double phi2, double r) {
  return -r * r * r * (std::sin(phi1) + std::sin(phi2));
}

double case3_triple_product(const RobotParams& p, double phi1, double phi2) {
  const Vec3 q1 = contact_point(p, Link::One, phi1);
  const Vec3 q2 = contact_point(p, Link::Two, phi2);
  return (q1 - q2).dot(tangent(p, Link::One, phi1).cross(tangent(p, Link::Two, phi2)));
}

Vec3 holonomic_residuals(const RobotParams& p, double phi1, double phi2, const Vec3& z_b) {
  const Vec3 q1 = contact_point(p, Link::One, phi1);
  const Vec3 q2 = contact_point(p, Link::Two, phi2);
  return {(q1 - q2).dot(z_b), tangent(p, Link::One, phi1).dot(z_b),
          tangent(p, Link::Two, phi2).dot(z_b)};
}

double contact_height(const RobotParams& p, Link l, double phi, const Vec3& z_b) {
  return -z_b.dot(contact_point(p, l, phi));
}

}  // namespace arcroll
