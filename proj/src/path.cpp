#include "arcroll/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace arcroll {

namespace {

constexpr double kCrossingTol = 1e-6;  // rad

int sign_of(double num) {
  if (std::abs(num) <= kBoundaryTol) return 0;
  return num > 0.0 ? 1 : -1;
}

Waypoint lerp(const Waypoint& a, const Waypoint& b, double t) {
  return {a.first + (b.first - a.first) * t, a.second + (b.second - a.second) * t};
}

MassConfig config_at(const Waypoint& w) { return MassConfig::from_degrees(w.first, w.second); }

}  // namespace

std::vector<Waypoint> parse_waypoints(const std::string& text) {
  std::vector<Waypoint> out;
  std::istringstream in(text);
  std::string line;
  for (size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    Waypoint w;
    if (!(fields >> w.first)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("waypoints line " + std::to_string(lineno) + ": expected two angles");
    }
    std::string rest;
    if (!(fields >> w.second) || (fields >> rest)) {
      throw std::invalid_argument("waypoints line " + std::to_string(lineno) + ": expected two angles");
    }
    out.push_back(w);
  }
  return out;
}

PathTrace run_path(const RobotParams& p, const std::vector<Waypoint>& waypoints, HybridState start,
                   double step_deg) {
  if (waypoints.empty()) throw std::invalid_argument("path needs at least one waypoint");
  if (!(step_deg > 0.0)) throw std::invalid_argument("path step must be positive");
  for (const Waypoint& w : waypoints) config_at(w).validate();
  p.validate();

  std::vector<Waypoint> points{waypoints.front()};
  for (size_t i = 1; i < waypoints.size(); ++i) {
    const Waypoint& a = waypoints[i - 1];
    const Waypoint& b = waypoints[i];
    const double dist = std::hypot(b.first - a.first, b.second - a.second);
    const auto n = std::max<long>(1, static_cast<long>(std::ceil(dist / step_deg - 1e-9)));
    for (long k = 1; k <= n; ++k) {
      points.push_back(k == n ? b : lerp(a, b, static_cast<double>(k) / static_cast<double>(n)));
    }
  }

  PathTrace trace;
  HybridState state = start;
  int last_sign = 0;
  bool prev_zero = false;

  for (size_t idx = 0; idx < points.size(); ++idx) {
    const Waypoint& w = points[idx];
    const MassConfig cfg = config_at(w);
    const int cur = sign_of(tan_ratio(state, cfg).num);

    if (idx > 0 && cur != 0 && last_sign != 0 && cur != last_sign) {
      Waypoint at = points[idx - 1];
      if (!prev_zero) {
        const Waypoint& from = points[idx - 1];
        const double span = deg2rad(std::hypot(w.first - from.first, w.second - from.second));
        double lo = 0.0;
        double hi = 1.0;
        while ((hi - lo) * span > kCrossingTol) {
          const double mid = 0.5 * (lo + hi);
          const int s = sign_of(tan_ratio(state, config_at(lerp(from, w, mid))).num);
          if (s == 0) {
            lo = hi = mid;
          } else if (s == last_sign) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        at = lerp(from, w, 0.5 * (lo + hi));
      }

      const double den = tan_ratio(state, config_at(at)).den;
      if (std::abs(den) <= kBoundaryTol) {
        trace.truncated = true;
        trace.diagnostic = "boundary crossed through a degenerate configuration near theta = (" +
                           std::to_string(at.first) + ", " + std::to_string(at.second) + ") deg";
        break;
      }
      const StateInfo& si = info(state);
      const double edge = boundary_edge(last_sign, den);
      const HybridState target = state_pinning(si.rolling, edge);
      const ContactSolution next = solve_equilibrium(p, target, cfg);
      if (next.degenerate) {
        trace.truncated = true;
        trace.diagnostic = "degenerate configuration after transition at sample " + std::to_string(idx);
        break;
      }
      const double released = next.phi.of(si.pinned);
      const int direction = released > si.pinned_phi ? 1 : (released < si.pinned_phi ? -1 : 0);
      try {
        PathEvent ev;
        ev.transition = transition_event(state, edge, direction);
        ev.theta1_deg = at.first;
        ev.theta2_deg = at.second;
        ev.sample_index = idx;
        trace.events.push_back(ev);
        state = ev.transition.to;
      } catch (const IllegalTransition& e) {
        trace.truncated = true;
        trace.diagnostic = std::string("illegal transition: ") + e.what();
        break;
      }
      last_sign = sign_of(tan_ratio(state, cfg).num);
    } else if (cur != 0) {
      last_sign = cur;
    }
    prev_zero = sign_of(tan_ratio(state, cfg).num) == 0;

    const ContactSolution sol = solve_equilibrium(p, state, cfg);
    if (sol.degenerate) {
      trace.truncated = true;
      trace.diagnostic = "degenerate configuration at theta = (" + std::to_string(w.first) + ", " +
                         std::to_string(w.second) + ") deg in state " +
                         std::to_string(state_id(state));
      break;
    }
    PathSample smp;
    smp.index = idx;
    smp.theta1_deg = w.first;
    smp.theta2_deg = w.second;
    smp.state = state;
    smp.phi1_deg = rad2deg(sol.phi.phi1);
    smp.phi2_deg = rad2deg(sol.phi.phi2);
    smp.z_b = sol.normal.z_b;
    trace.samples.push_back(smp);
  }
  return trace;
}

}  // namespace arcroll
