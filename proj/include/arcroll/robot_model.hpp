#pragma once

#include "arcroll/geometry.hpp"

#include <filesystem>
#include <string>

namespace arcroll {

enum class Link : int { One = 1, Two = 2 };

// Throws std::invalid_argument for anything but 1 or 2.
Link link_from_index(int index);
inline int index_of(Link l) { return static_cast<int>(l); }

// Inter-link transform of the orthogonal, concentric two-arc shape:
// R12 = [[0,0,1],[0,-1,0],[1,0,0]], o12 = 0.
Transform3 default_link_transform();
bool is_default_link_transform(const Transform3& t, double tol = 1e-12);

/// Physical parameters. Defaults are the 403 mm diameter prototype
/// (431 g arcs, 427 g shifting masses).
struct RobotParams {
  double r = 0.2015;          // arc radius [m]
  double link_mass = 0.431;   // m1 = m2 [kg]
  double shift_mass = 0.427;  // M1 = M2 [kg]
  double g = 9.81;            // [m/s^2]
  Transform3 t12 = default_link_transform();

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  double total_weight() const { return 2.0 * (shift_mass + link_mass) * g; }

  // Plain-text "key value" or "key = value" lines; '#' starts a comment.
  // Keys: r_m, link_mass_kg, shift_mass_kg, g. Missing keys keep defaults.
  static RobotParams from_config_text(const std::string& text);
  static RobotParams from_config_file(const std::filesystem::path& path);
};

/// Internal-mass angles along each arc [rad], each in [0, pi].
struct MassConfig {
  double theta1 = 0.0;
  double theta2 = 0.0;

  static MassConfig from_degrees(double theta1_deg, double theta2_deg);
  void validate() const;
};

/// Ground-contact angles [rad], each in [0, pi].
struct ContactAngles {
  double phi1 = 0.0;
  double phi2 = 0.0;

  double of(Link l) const { return l == Link::One ? phi1 : phi2; }
};

// Point on link `l` at arc angle `angle`, in the body frame {b} = {1}.
Vec3 arc_point(const RobotParams& p, Link l, double angle);

// p_i: position of the shifting mass.
Vec3 mass_position(const RobotParams& p, Link l, double theta);
// q_i: ground-contact point.
Vec3 contact_point(const RobotParams& p, Link l, double phi);
// t_i = dq_i/dphi_i. Returned everywhere, including the arc ends.
Vec3 tangent(const RobotParams& p, Link l, double phi);
// Center of mass of the arc, (0, 2r/pi, 0) in its own frame, mapped to {b}.
Vec3 link_com(const RobotParams& p, Link l);
// Same quantity expressed in the link's own frame.
Vec3 link_com_local(const RobotParams& p);

}  // namespace arcroll
