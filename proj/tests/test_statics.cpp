#include "arcroll/statics.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace arcroll;
using arcroll::test::Rng;

namespace {

constexpr HybridState S1 = HybridState::PivotA2;
constexpr HybridState S2 = HybridState::PivotB2;
constexpr HybridState S3 = HybridState::PivotA1;
constexpr HybridState S4 = HybridState::PivotB1;

double free_deg(const ContactSolution& s) { return rad2deg(s.free_phi()); }

double residual(const RobotParams& p, const ContactSolution& s, const MassConfig& c) {
  return wrench_residual(p, s.state, c, s.free_phi(), s.n1, s.n2).norm(p.r);
}

}  // namespace

TEST(EquilibriumAngle, DeskExample) {
  const RobotParams p;
  const MassConfig c = MassConfig::from_degrees(45, 90);
  const auto sols = solve_all_states(p, c);
  EXPECT_NEAR(free_deg(sols[0]), 157.5, 1e-12);
  EXPECT_NEAR(free_deg(sols[1]), 157.5, 1e-12);
  EXPECT_NEAR(free_deg(sols[2]), 90.0, 1e-12);
  EXPECT_NEAR(free_deg(sols[3]), 90.0, 1e-12);
  EXPECT_EQ(sols[0].phi.phi2, 0.0);
  EXPECT_EQ(sols[1].phi.phi2, kPi);
  EXPECT_EQ(sols[2].phi.phi1, 0.0);
  EXPECT_EQ(sols[3].phi.phi1, kPi);
  for (const auto& s : sols) {
    EXPECT_FALSE(s.boundary);
    EXPECT_FALSE(s.degenerate);
    EXPECT_TRUE(s.valid);
  }
}

TEST(EquilibriumAngle, MassAtTopOfLinkOne) {
  const auto a = equilibrium_angle(S1, MassConfig::from_degrees(90, 0));
  EXPECT_EQ(a.kind, AngleKind::Interior);
  EXPECT_NEAR(a.phi, kPi / 2, 1e-15);
}

TEST(EquilibriumAngle, DiagonalsAreBoundaries) {
  for (double t : {10.0, 30.0, 60.0, 120.0, 170.0}) {
    for (HybridState s : kAllStates) {
      EXPECT_EQ(equilibrium_angle(s, MassConfig::from_degrees(t, t)).kind, AngleKind::Boundary);
      EXPECT_EQ(equilibrium_angle(s, MassConfig::from_degrees(t, 180 - t)).kind, AngleKind::Boundary);
    }
  }
}

TEST(EquilibriumAngle, BoundarySentinelFollowsDenominator) {
  EXPECT_EQ(equilibrium_angle(S1, MassConfig::from_degrees(30, 30)).phi, 0.0);
  EXPECT_EQ(equilibrium_angle(S1, MassConfig::from_degrees(150, 150)).phi, kPi);
  EXPECT_EQ(boundary_edge(+1, 0.5), 0.0);
  EXPECT_EQ(boundary_edge(-1, 0.5), kPi);
  EXPECT_EQ(boundary_edge(+1, -0.5), kPi);
  EXPECT_EQ(boundary_edge(-1, -0.5), 0.0);
}

TEST(EquilibriumAngle, BothMassesAtTheTopIsDegenerate) {
  for (HybridState s : kAllStates) {
    const auto a = equilibrium_angle(s, MassConfig::from_degrees(90, 90));
    EXPECT_EQ(a.kind, AngleKind::Degenerate);
    EXPECT_TRUE(std::isnan(a.phi));
    const ContactSolution sol = solve_equilibrium(RobotParams{}, s, MassConfig::from_degrees(90, 90));
    EXPECT_TRUE(sol.degenerate);
    EXPECT_FALSE(sol.valid);
  }
}

TEST(EquilibriumAngle, StaysInsideTheArc) {
  Rng rng(4);
  for (int i = 0; i < 5000; ++i) {
    const MassConfig c{rng.uniform(0, kPi), rng.uniform(0, kPi)};
    for (HybridState s : kAllStates) {
      const auto a = equilibrium_angle(s, c);
      EXPECT_GE(a.phi, 0.0);
      EXPECT_LE(a.phi, kPi);
    }
  }
}

TEST(ReactionForces, KnownValues) {
  const RobotParams p;
  auto check = [&](HybridState s, double t1, double t2, double n1, double n2) {
    const ContactSolution sol = solve_equilibrium(p, s, MassConfig::from_degrees(t1, t2));
    EXPECT_NEAR(sol.n1, n1, 1e-6) << "state " << state_id(s);
    EXPECT_NEAR(sol.n2, n2, 1e-6) << "state " << state_id(s);
  };
  check(S1, 45, 90, 6.81396885, 10.01999115);
  check(S2, 120, 20, 11.90206249, 4.93189751);
  check(S3, 45, 90, 9.28452338, 7.54943662);
  check(S4, 45, 90, 6.322545, 10.511415);
}

TEST(ReactionForces, SymmetricLoadSplitsEvenly) {
  RobotParams p;
  p.link_mass = 1.0;
  p.shift_mass = 1.0;
  const ContactSolution sol = solve_equilibrium(p, S1, MassConfig::from_degrees(90, 0));
  EXPECT_NEAR(sol.n1, 19.62, 1e-12);
  EXPECT_NEAR(sol.n2, 19.62, 1e-12);
}

TEST(ReactionForces, SumToTotalWeight) {
  const RobotParams p;
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    const MassConfig c{rng.uniform(0.01, kPi - 0.01), rng.uniform(0.01, kPi - 0.01)};
    for (HybridState s : kAllStates) {
      const ContactSolution sol = solve_equilibrium(p, s, c);
      if (sol.degenerate) continue;
      EXPECT_NEAR(sol.n1 + sol.n2, p.total_weight(), 1e-12);
    }
  }
}

TEST(ReactionForces, IndependentOfRadius) {
  RobotParams small;
  RobotParams large;
  large.r = 3.0;
  const MassConfig c = MassConfig::from_degrees(20, 130);
  for (HybridState s : kAllStates) {
    EXPECT_DOUBLE_EQ(solve_equilibrium(small, s, c).n1, solve_equilibrium(large, s, c).n1);
  }
}

TEST(Wrench, VanishesAtTheClosedFormSolution) {
  Rng rng(12);
  for (int i = 0; i < 3000; ++i) {
    RobotParams p;
    p.r = rng.uniform(0.1, 2.0);
    p.link_mass = rng.uniform(0.0, 2.0);
    p.shift_mass = rng.uniform(0.1, 2.0);
    const MassConfig c{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
    for (HybridState s : kAllStates) {
      const ContactSolution sol = solve_equilibrium(p, s, c);
      if (sol.degenerate || sol.boundary) continue;
      EXPECT_LT(residual(p, sol, c), 1e-9 * p.shift_mass * p.g * p.r);
    }
  }
}

TEST(Wrench, DetectsAWrongAngle) {
  const RobotParams p;
  const MassConfig c = MassConfig::from_degrees(45, 90);
  const ContactSolution sol = solve_equilibrium(p, S1, c);
  const Wrench w = wrench_residual(p, S1, c, sol.free_phi() + 0.01, sol.n1, sol.n2);
  EXPECT_GT(w.norm(p.r), 1e-4);
}

TEST(Wrench, DetectsWrongForces) {
  const RobotParams p;
  const MassConfig c = MassConfig::from_degrees(45, 90);
  const ContactSolution sol = solve_equilibrium(p, S3, c);
  const Wrench w = wrench_residual(p, S3, c, sol.free_phi(), sol.n1 + 0.1, sol.n2 - 0.1);
  EXPECT_GT(w.norm(p.r), 1e-3);
}

TEST(Statics, OtherShapesAreRejected) {
  RobotParams p;
  p.t12 = Transform3::identity();
  EXPECT_THROW(solve_equilibrium(p, S1, MassConfig::from_degrees(45, 90)), UnsupportedShape);
}

TEST(Pose, ContactsLandOnTheGround) {
  const RobotParams p;
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const MassConfig c{rng.uniform(0.01, kPi - 0.01), rng.uniform(0.01, kPi - 0.01)};
    for (HybridState s : kAllStates) {
      const ContactSolution sol = solve_equilibrium(p, s, c);
      if (sol.degenerate) continue;
      const Transform3 t = pose(p, sol, 0.3, -0.2);
      EXPECT_LT((t.rotation * sol.normal.z_b - Vec3::UnitZ()).norm(), 1e-12);
      EXPECT_NEAR(t.apply_point(contact_point(p, Link::One, sol.phi.phi1)).z(), 0.0, 1e-12);
      EXPECT_NEAR(t.apply_point(contact_point(p, Link::Two, sol.phi.phi2)).z(), 0.0, 1e-12);
      EXPECT_NEAR(t.translation.z(), p.r / std::sqrt(2.0), 1e-15);
    }
  }
}
