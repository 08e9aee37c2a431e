#include "arcroll/robot_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arcroll {

namespace {

constexpr double kAngleSlack = 1e-12;

// Degree inputs such as 180 must land exactly on the sentinel pi.
double snap_to_range(double rad) {
  if (std::abs(rad) <= kAngleSlack) return 0.0;
  if (std::abs(rad - kPi) <= kAngleSlack) return kPi;
  return rad;
}

void check_arc_angle(double a, const char* name) {
  if (!std::isfinite(a) || a < -kAngleSlack || a > kPi + kAngleSlack) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, pi]");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Link link_from_index(int index) {
  if (index == 1) return Link::One;
  if (index == 2) return Link::Two;
  throw std::invalid_argument("link index must be 1 or 2, got " + std::to_string(index));
}

Transform3 default_link_transform() {
  Mat3 r;
  r << 0, 0, 1,
       0, -1, 0,
       1, 0, 0;
  return {Rotation3::from_matrix(r), Vec3::Zero()};
}

bool is_default_link_transform(const Transform3& t, double tol) {
  const Transform3 d = default_link_transform();
  return (t.rotation.matrix() - d.rotation.matrix()).cwiseAbs().maxCoeff() <= tol &&
         t.translation.cwiseAbs().maxCoeff() <= tol;
}

void RobotParams::validate() const {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("arc radius must be > 0");
  if (!(link_mass >= 0.0) || !std::isfinite(link_mass)) {
    throw std::invalid_argument("link mass must be >= 0");
  }
  if (!(shift_mass >= 0.0) || !std::isfinite(shift_mass)) {
    throw std::invalid_argument("shifting mass must be >= 0");
  }
  if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("gravity must be > 0");
  Rotation3::from_matrix(t12.rotation.matrix());
}

RobotParams RobotParams::from_config_text(const std::string& text) {
  RobotParams p;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == '=') ch = ' ';
    }
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields(line);
    std::string key;
    double value = 0.0;
    std::string extra;
    if (!(fields >> key >> value) || (fields >> extra)) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected '<key> <number>'");
    }
    if (key == "r_m") {
      p.r = value;
    } else if (key == "link_mass_kg") {
      p.link_mass = value;
    } else if (key == "shift_mass_kg") {
      p.shift_mass = value;
    } else if (key == "g") {
      p.g = value;
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
  }
  p.validate();
  return p;
}

RobotParams RobotParams::from_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_config_text(buf.str());
}

MassConfig MassConfig::from_degrees(double theta1_deg, double theta2_deg) {
  MassConfig c{snap_to_range(deg2rad(theta1_deg)), snap_to_range(deg2rad(theta2_deg))};
  c.validate();
  return c;
}

void MassConfig::validate() const {
  check_arc_angle(theta1, "theta1");
  check_arc_angle(theta2, "theta2");
}

Vec3 arc_point(const RobotParams& p, Link l, double angle) {
  const Vec3 local(p.r * std::cos(angle), p.r * std::sin(angle), 0.0);
  return l == Link::One ? local : p.t12.apply_point(local);
}

Vec3 mass_position(const RobotParams& p, Link l, double theta) { return arc_point(p, l, theta); }

Vec3 contact_point(const RobotParams& p, Link l, double phi) { return arc_point(p, l, phi); }

Vec3 tangent(const RobotParams& p, Link l, double phi) {
  const Vec3 local(-p.r * std::sin(phi), p.r * std::cos(phi), 0.0);
  return l == Link::One ? local : p.t12.apply_vector(local);
}

Vec3 link_com_local(const RobotParams& p) { return {0.0, 2.0 * p.r / kPi, 0.0}; }

Vec3 link_com(const RobotParams& p, Link l) {
  const Vec3 local = link_com_local(p);
  return l == Link::One ? local : p.t12.apply_point(local);
}

}  // namespace arcroll
