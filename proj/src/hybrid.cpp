#include "arcroll/hybrid.hpp"

#include "arcroll/contact.hpp"

#include <string>

namespace arcroll {

namespace {

const std::array<StateInfo, 4> kStates = {{
    {HybridState::PivotA2, "A2", Link::One, Link::Two, 0.0},
    {HybridState::PivotB2, "B2", Link::One, Link::Two, kPi},
    {HybridState::PivotA1, "A1", Link::Two, Link::One, 0.0},
    {HybridState::PivotB1, "B1", Link::Two, Link::One, kPi},
}};

// Rate signs follow the released contact: leaving phi = 0 it grows, leaving
// phi = pi it shrinks.
const std::array<Guard, 8> kGuards = {{
    {HybridState::PivotA2, HybridState::PivotA1, Link::One, 0.0, +1},
    {HybridState::PivotA2, HybridState::PivotB1, Link::One, kPi, +1},
    {HybridState::PivotB2, HybridState::PivotA1, Link::One, 0.0, -1},
    {HybridState::PivotB2, HybridState::PivotB1, Link::One, kPi, -1},
    {HybridState::PivotA1, HybridState::PivotA2, Link::Two, 0.0, +1},
    {HybridState::PivotA1, HybridState::PivotB2, Link::Two, kPi, +1},
    {HybridState::PivotB1, HybridState::PivotA2, Link::Two, 0.0, -1},
    {HybridState::PivotB1, HybridState::PivotB2, Link::Two, kPi, -1},
}};

int sign_of(int v) { return (v > 0) - (v < 0); }

bool moves_inward(double edge, int rate) {
  return (edge == 0.0 && rate > 0) || (edge == kPi && rate < 0);
}

}  // namespace

const StateInfo& info(HybridState s) { return kStates.at(static_cast<size_t>(state_id(s) - 1)); }

HybridState state_from_id(int id) {
  if (id < 1 || id > 4) {
    throw std::invalid_argument("hybrid state id must be 1..4, got " + std::to_string(id));
  }
  return static_cast<HybridState>(id);
}

HybridState state_pinning(Link link, double phi) {
  if (!is_arc_end(phi)) throw std::invalid_argument("pinned contact angle must be 0 or pi");
  for (const auto& s : kStates) {
    if (s.pinned == link && s.pinned_phi == phi) return s.state;
  }
  throw std::logic_error("unreachable: no state pins the given arc end");
}

const std::array<Guard, 8>& transition_guards() { return kGuards; }

TransitionEvent transition_event(HybridState current, double phi_roll_at,
                                 int phi_other_rate_sign) {
  if (!is_arc_end(phi_roll_at)) {
    throw IllegalTransition("transitions happen only when a contact reaches 0 or pi");
  }
  const Link rolling = info(current).rolling;
  const int rate = sign_of(phi_other_rate_sign);
  for (const auto& g : kGuards) {
    if (g.from == current && g.edge_link == rolling && g.edge_value == phi_roll_at) {
      if (g.rate_sign != rate) {
        throw IllegalTransition("guard " + std::to_string(state_id(g.from)) + "->" +
                                std::to_string(state_id(g.to)) + " requires released rate sign " +
                                std::to_string(g.rate_sign) + ", got " + std::to_string(rate));
      }
      return {g.from, g.to, rolling, phi_roll_at, rate};
    }
  }
  throw std::logic_error("unreachable: guard table incomplete");
}

HybridState next_state(HybridState current, double phi_roll_at, int phi_other_rate_sign) {
  return transition_event(current, phi_roll_at, phi_other_rate_sign).to;
}

std::vector<HybridState> reachable(HybridState from) {
  std::vector<HybridState> out;
  for (const auto& g : kGuards) {
    if (g.from == from) out.push_back(g.to);
  }
  return out;
}

bool is_legal_transition(HybridState from, HybridState to) {
  for (const auto& g : kGuards) {
    if (g.from == from && g.to == to) return true;
  }
  return false;
}

HybridState resolve_corner(double phi1_edge, double phi2_edge, int phi1_rate_sign,
                           int phi2_rate_sign) {
  if (!is_arc_end(phi1_edge) || !is_arc_end(phi2_edge)) {
    throw std::invalid_argument("corner resolution needs both contacts on arc ends");
  }
  const bool roll1 = moves_inward(phi1_edge, phi1_rate_sign);
  const bool roll2 = moves_inward(phi2_edge, phi2_rate_sign);
  if (roll1 == roll2) {
    throw DegenerateConfiguration("corner configuration: commanded motion does not select a state");
  }
  return roll1 ? state_pinning(Link::Two, phi2_edge) : state_pinning(Link::One, phi1_edge);
}

}  // namespace arcroll
