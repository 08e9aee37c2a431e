#pragma once

#include "arcroll/contact.hpp"
#include "arcroll/hybrid.hpp"
#include "arcroll/robot_model.hpp"

#include <stdexcept>

namespace arcroll {

/// The closed forms assume the orthogonal, concentric arc pair; other link
/// transforms are rejected.
class UnsupportedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerator and denominator of tan(phi_free) for the state's rolling link:
// (s_th1 - s_th2, c_th1) rolling on L1, (s_th2 - s_th1, c_th2) rolling on L2.
// The numerator is evaluated in product form so it vanishes exactly on the
// diagonal and stays accurate near the boundaries.
struct TanRatio {
  double num = 0.0;
  double den = 0.0;
};
TanRatio tan_ratio(HybridState s, const MassConfig& c);

// |num| below this is a transition boundary; with |den| also below it the
// balance is indifferent (degenerate).
inline constexpr double kBoundaryTol = 1e-12;

enum class AngleKind { Interior, Boundary, Degenerate };

struct EquilibriumAngle {
  double phi = 0.0;  // free contact angle in [0, pi]; NaN when degenerate
  AngleKind kind = AngleKind::Interior;
};

// phi = atan2(num, den) mapped into (0, pi). On a boundary the sentinel is
// atan2(+0, den), i.e. 0 for den > 0 and pi for den < 0.
EquilibriumAngle equilibrium_angle(HybridState s, const MassConfig& c);

// Sentinel reached when the numerator shrinks to zero from `num_sign`.
double boundary_edge(int num_sign, double den);

struct ReactionForces {
  double n1 = 0.0;  // upward normal force at q1 [N]
  double n2 = 0.0;  // upward normal force at q2 [N]
};

// Normal forces at the two contacts given the free contact angle:
// n1,2 = (M + m) g +/- (M g / 2) D, with D the state's moment-balance term.
ReactionForces reaction_forces(const RobotParams& p, HybridState s, const MassConfig& c,
                               double phi_free);

struct ContactSolution {
  HybridState state = HybridState::PivotA2;
  ContactAngles phi;
  SurfaceNormal normal;
  double n1 = 0.0;
  double n2 = 0.0;
  bool boundary = false;
  bool degenerate = false;
  bool valid = false;  // n1 >= 0 and n2 >= 0

  double free_phi() const { return phi.of(info(state).rolling); }
};

ContactSolution solve_equilibrium(const RobotParams& p, HybridState s, const MassConfig& c);
std::array<ContactSolution, 4> solve_all_states(const RobotParams& p, const MassConfig& c);

struct Wrench {
  Vec3 force = Vec3::Zero();   // [N]
  Vec3 moment = Vec3::Zero();  // about O_b [N m]

  // sqrt(|f L|^2 + |m|^2): both parts in moment units for a length scale L.
  double norm(double length_scale) const;
};

/// Free-body wrench about O_b for a candidate (phi, n1, n2): gravity on both
/// shifting masses and both arcs, frictionless normal reactions at the
/// contacts, ground normal built from the contact geometry. Independent of
/// the closed forms; zero exactly at equilibrium.
Wrench wrench_residual(const RobotParams& p, HybridState s, const MassConfig& c,
                       double phi_free, double n1, double n2);

// Planar pose T_sb: yaw-free R_sb with R_sb z_b = z_s, origin at (x, y, r/sqrt 2).
Transform3 pose(const RobotParams& p, const ContactSolution& sol, double x = 0.0, double y = 0.0);

}  // namespace arcroll
