#pragma once

#include "arcroll/robot_model.hpp"

#include <stdexcept>

namespace arcroll {

/// Raised when both contact angles sit on arc ends, where neither tangent
/// exists and the surface normal is not determined by the contact constraint.
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which tangent is undefined: Case1 pins phi2 at an arc end, Case2 pins phi1.
enum class ContactCase { Case1, Case2 };

struct SurfaceNormal {
  Vec3 z_b = Vec3::UnitZ();  // ground normal seen from the body frame
  ContactCase contact_case = ContactCase::Case1;
};

inline bool is_arc_end(double phi) { return phi == 0.0 || phi == kPi; }

// z_b = -(c_phi1, s_phi1, c_phi2)/sqrt(2). phi2 must be exactly 0 or pi and
// phi1 strictly inside (0, pi).
SurfaceNormal normal_case1(double phi1, double phi2);
// z_b = (-c_phi1, s_phi2, -c_phi2)/sqrt(2). phi1 must be exactly 0 or pi and
// phi2 strictly inside (0, pi).
SurfaceNormal normal_case2(double phi1, double phi2);

// Closed forms above without the interior check, so arc-corner
// configurations (both angles on ends) can still be evaluated.
Vec3 closed_form_normal(ContactCase c, double phi1, double phi2);

// Geometric construction for any link transform: the unit normal to the
// defined tangent and q1 - q2, signed so that -z_b.q_i > 0.
SurfaceNormal constructed_normal(const RobotParams& p, ContactCase c, double phi1, double phi2);

// Coplanarity residual for two interior contacts: -r^3 (s_phi1 + s_phi2).
double case3_residual(double phi1, double phi2, double r);
// Same quantity from the geometry: (q1 - q2) . (t1 x t2).
double case3_triple_product(const RobotParams& p, double phi1, double phi2);

// [(q1 - q2).z_b, t1.z_b, t2.z_b]; all zero for a consistent contact.
Vec3 holonomic_residuals(const RobotParams& p, double phi1, double phi2, const Vec3& z_b);

// Height of the body origin above the ground, seen from contact on link l.
double contact_height(const RobotParams& p, Link l, double phi, const Vec3& z_b);

}  // namespace arcroll
