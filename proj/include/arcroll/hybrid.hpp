#pragma once

#include "arcroll/robot_model.hpp"

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace arcroll {

// Each state pivots about one arc end while rolling along the other link.
// Integer values are the serialized state ids.
enum class HybridState : int {
  PivotA2 = 1,  // phi2 = 0,  roll along L1
  PivotB2 = 2,  // phi2 = pi, roll along L1
  PivotA1 = 3,  // phi1 = 0,  roll along L2
  PivotB1 = 4,  // phi1 = pi, roll along L2
};

inline constexpr std::array<HybridState, 4> kAllStates = {
    HybridState::PivotA2, HybridState::PivotB2, HybridState::PivotA1, HybridState::PivotB1};

struct StateInfo {
  HybridState state;
  std::string_view pivot;  // arc-end label
  Link rolling;
  Link pinned;
  double pinned_phi;  // exactly 0 or pi
};

const StateInfo& info(HybridState s);
inline int state_id(HybridState s) { return static_cast<int>(s); }
HybridState state_from_id(int id);

// State whose pinned contact is (link, phi). phi must be exactly 0 or pi.
HybridState state_pinning(Link link, double phi);

class IllegalTransition : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Guard on a directed edge of the transition graph: the rolling link's
/// contact reaches `edge_value` on `edge_link`, and the newly released
/// contact angle moves with sign `rate_sign`.
struct Guard {
  HybridState from;
  HybridState to;
  Link edge_link;
  double edge_value;
  int rate_sign;
};

const std::array<Guard, 8>& transition_guards();

struct TransitionEvent {
  HybridState from;
  HybridState to;
  Link boundary_link;     // link whose contact hit an arc end
  double boundary_value;  // 0 or pi
  int direction;          // sign of the released contact angle's rate
};

// Fires the transition taken when the rolling link's contact angle reaches
// `phi_roll_at` while the other contact angle starts moving with sign
// `phi_other_rate_sign`. Throws IllegalTransition when no guard matches.
HybridState next_state(HybridState current, double phi_roll_at, int phi_other_rate_sign);
TransitionEvent transition_event(HybridState current, double phi_roll_at, int phi_other_rate_sign);

std::vector<HybridState> reachable(HybridState from);
bool is_legal_transition(HybridState from, HybridState to);

// Both contacts on arc ends (phi1_edge, phi2_edge): picks the state whose
// free contact moves into its arc under the commanded rates. Throws
// DegenerateConfiguration when both or neither contact moves inward.
HybridState resolve_corner(double phi1_edge, double phi2_edge, int phi1_rate_sign,
                           int phi2_rate_sign);

}  // namespace arcroll
