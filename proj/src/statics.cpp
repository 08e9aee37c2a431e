#include "arcroll/statics.hpp"

#include <cmath>
#include <limits>

namespace arcroll {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool rolls_on_link1(HybridState s) { return info(s).rolling == Link::One; }

void require_default_shape(const RobotParams& p) {
  if (!is_default_link_transform(p.t12)) {
    throw UnsupportedShape("closed-form statics need the default orthogonal link transform");
  }
}

ContactAngles assemble_angles(HybridState s, double phi_free) {
  const StateInfo& si = info(s);
  return si.rolling == Link::One ? ContactAngles{phi_free, si.pinned_phi}
                                 : ContactAngles{si.pinned_phi, phi_free};
}

// Moment-balance term D of the state (see reaction_forces).
double balance_term(HybridState s, const MassConfig& c, double phi) {
  const double t1 = c.theta1;
  const double t2 = c.theta2;
  switch (s) {
    case HybridState::PivotA2:
      return std::cos(phi - t1) - std::cos(t2) - std::sin(phi) * std::sin(t2);
    case HybridState::PivotB2:
      return std::cos(phi - t1) + std::cos(t2) - std::sin(phi) * std::sin(t2);
    case HybridState::PivotA1:
      return std::sin(phi) * std::sin(t1) + std::cos(t1) - std::cos(phi - t2);
    case HybridState::PivotB1:
      return std::sin(phi) * std::sin(t1) - std::cos(t1) - std::cos(phi - t2);
  }
  throw std::logic_error("unreachable: unknown hybrid state");
}

}  // namespace

TanRatio tan_ratio(HybridState s, const MassConfig& c) {
  // s_a - s_b = 2 cos((a + b)/2) sin((a - b)/2)
  const double diff =
      2.0 * std::cos(0.5 * (c.theta1 + c.theta2)) * std::sin(0.5 * (c.theta1 - c.theta2));
  if (rolls_on_link1(s)) return {diff, std::cos(c.theta1)};
  return {-diff, std::cos(c.theta2)};
}

double boundary_edge(int num_sign, double den) {
  return (num_sign > 0) == (den > 0.0) ? 0.0 : kPi;
}

EquilibriumAngle equilibrium_angle(HybridState s, const MassConfig& c) {
  c.validate();
  const TanRatio t = tan_ratio(s, c);
  if (std::abs(t.num) <= kBoundaryTol) {
    if (std::abs(t.den) <= kBoundaryTol) return {kNaN, AngleKind::Degenerate};
    return {boundary_edge(+1, t.den), AngleKind::Boundary};
  }
  double phi = std::atan2(t.num, t.den);
  if (phi < 0.0) phi += kPi;
  return {phi, AngleKind::Interior};
}

ReactionForces reaction_forces(const RobotParams& p, HybridState s, const MassConfig& c,
                               double phi_free) {
  if (!std::isfinite(phi_free)) {
    throw DegenerateConfiguration("reaction forces are undefined for a degenerate balance");
  }
  require_default_shape(p);
  const double mean = (p.shift_mass + p.link_mass) * p.g;
  const double split = 0.5 * p.shift_mass * p.g * balance_term(s, c, phi_free);
  return {mean + split, mean - split};
}

ContactSolution solve_equilibrium(const RobotParams& p, HybridState s, const MassConfig& c) {
  require_default_shape(p);
  ContactSolution sol;
  sol.state = s;
  sol.normal.contact_case = rolls_on_link1(s) ? ContactCase::Case1 : ContactCase::Case2;

  const EquilibriumAngle a = equilibrium_angle(s, c);
  sol.phi = assemble_angles(s, a.phi);
  if (a.kind == AngleKind::Degenerate) {
    sol.degenerate = true;
    sol.normal.z_b = Vec3::Constant(kNaN);
    sol.n1 = sol.n2 = kNaN;
    return sol;
  }
  sol.boundary = a.kind == AngleKind::Boundary;
  sol.normal.z_b = closed_form_normal(sol.normal.contact_case, sol.phi.phi1, sol.phi.phi2);
  const ReactionForces f = reaction_forces(p, s, c, a.phi);
  sol.n1 = f.n1;
  sol.n2 = f.n2;
  sol.valid = f.n1 >= 0.0 && f.n2 >= 0.0;
  return sol;
}

std::array<ContactSolution, 4> solve_all_states(const RobotParams& p, const MassConfig& c) {
  std::array<ContactSolution, 4> out;
  for (size_t i = 0; i < kAllStates.size(); ++i) out[i] = solve_equilibrium(p, kAllStates[i], c);
  return out;
}

double Wrench::norm(double length_scale) const {
  return std::sqrt((force * length_scale).squaredNorm() + moment.squaredNorm());
}

Wrench wrench_residual(const RobotParams& p, HybridState s, const MassConfig& c,
                       double phi_free, double n1, double n2) {
  const ContactAngles phi = assemble_angles(s, phi_free);
  const ContactCase cc = rolls_on_link1(s) ? ContactCase::Case1 : ContactCase::Case2;
  const Vec3 z = constructed_normal(p, cc, phi.phi1, phi.phi2).z_b;

  struct Load {
    Vec3 at;
    double weight;
  };
  const Load loads[] = {
      {mass_position(p, Link::One, c.theta1), p.shift_mass * p.g},
      {mass_position(p, Link::Two, c.theta2), p.shift_mass * p.g},
      {link_com(p, Link::One), p.link_mass * p.g},
      {link_com(p, Link::Two), p.link_mass * p.g},
  };
  const Vec3 q1 = contact_point(p, Link::One, phi.phi1);
  const Vec3 q2 = contact_point(p, Link::Two, phi.phi2);

  Wrench w;
  for (const Load& l : loads) {
    const Vec3 f = -l.weight * z;
    w.force += f;
    w.moment += l.at.cross(f);
  }
  w.force += n1 * z + n2 * z;
  w.moment += q1.cross(n1 * z) + q2.cross(n2 * z);
  return w;
}

Transform3 pose(const RobotParams& p, const ContactSolution& sol, double x, double y) {
  if (sol.degenerate) throw DegenerateConfiguration("no pose for a degenerate balance");
  Transform3 t;
  t.rotation = rotation_between(sol.normal.z_b, Vec3::UnitZ());
  t.translation = Vec3(x, y, p.r / std::sqrt(2.0));
  return t;
}

}  // namespace arcroll
