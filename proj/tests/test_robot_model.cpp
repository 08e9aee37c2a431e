#include "arcroll/robot_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace arcroll;

TEST(LinkTransform, DefaultSwapsXAndZAndFlipsY) {
  const Mat3 r = default_link_transform().rotation.matrix();
  Mat3 expected;
  expected << 0, 0, 1, 0, -1, 0, 1, 0, 0;
  EXPECT_EQ(r, expected);
  EXPECT_TRUE(default_link_transform().translation.isZero());
  EXPECT_TRUE(is_default_link_transform(default_link_transform()));
  EXPECT_FALSE(is_default_link_transform(Transform3::identity()));
}

TEST(Link, IndexRoundTrip) {
  EXPECT_EQ(link_from_index(1), Link::One);
  EXPECT_EQ(link_from_index(2), Link::Two);
  EXPECT_EQ(index_of(Link::Two), 2);
  EXPECT_THROW(link_from_index(3), std::invalid_argument);
}

TEST(ArcPoints, LinkOneLiesInXYPlane) {
  const RobotParams p;
  const Vec3 q = contact_point(p, Link::One, kPi / 3);
  EXPECT_NEAR(q.x(), p.r * 0.5, 1e-15);
  EXPECT_NEAR(q.y(), p.r * std::sqrt(3.0) / 2, 1e-15);
  EXPECT_EQ(q.z(), 0.0);
}

TEST(ArcPoints, LinkTwoLiesInYZPlaneBelowOrigin) {
  const RobotParams p;
  for (double a : {0.0, 0.4, kPi / 2, 2.0, kPi}) {
    const Vec3 q = contact_point(p, Link::Two, a);
    EXPECT_NEAR(q.x(), 0.0, 1e-15);
    EXPECT_NEAR(q.y(), -p.r * std::sin(a), 1e-15);
    EXPECT_NEAR(q.z(), p.r * std::cos(a), 1e-15);
    EXPECT_NEAR(q.norm(), p.r, 1e-15);
  }
}

TEST(ArcPoints, TangentMatchesFiniteDifference) {
  const RobotParams p;
  const double h = 1e-6;
  for (Link l : {Link::One, Link::Two}) {
    for (double a = 0.05; a < kPi; a += 0.3) {
      const Vec3 fd = (contact_point(p, l, a + h) - contact_point(p, l, a - h)) / (2 * h);
      EXPECT_LT((tangent(p, l, a) - fd).norm(), 1e-9) << "link " << index_of(l) << " angle " << a;
    }
  }
}

TEST(LinkCom, ArcCentroidsCancel) {
  const RobotParams p;
  const Vec3 c1 = link_com(p, Link::One);
  const Vec3 c2 = link_com(p, Link::Two);
  EXPECT_NEAR(c1.y(), 2 * p.r / kPi, 1e-15);
  EXPECT_LT((c1 + c2).norm(), 1e-15);
}

TEST(LinkCom, CentroidIsMeanOfArcPoints) {
  const RobotParams p;
  const int n = 20000;
  Vec3 mean = Vec3::Zero();
  for (int i = 0; i < n; ++i) mean += arc_point(p, Link::One, kPi * (i + 0.5) / n);
  mean /= n;
  EXPECT_LT((mean - link_com(p, Link::One)).norm(), 1e-8);
}

TEST(Params, DefaultsAreThePrototype) {
  const RobotParams p;
  EXPECT_DOUBLE_EQ(p.r, 0.2015);
  EXPECT_DOUBLE_EQ(p.link_mass, 0.431);
  EXPECT_DOUBLE_EQ(p.shift_mass, 0.427);
  EXPECT_DOUBLE_EQ(p.total_weight(), 2 * (0.431 + 0.427) * 9.81);
  EXPECT_NO_THROW(p.validate());
}

TEST(Params, ValidateRejectsBadValues) {
  RobotParams p;
  p.r = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RobotParams{};
  p.shift_mass = -1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RobotParams{};
  p.g = NAN;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Params, ConfigText) {
  const RobotParams p = RobotParams::from_config_text(
      "# desk prototype\n"
      "r_m = 0.5\n"
      "link_mass_kg 1.5   # per arc\n"
      "\n"
      "g=10\n");
  EXPECT_DOUBLE_EQ(p.r, 0.5);
  EXPECT_DOUBLE_EQ(p.link_mass, 1.5);
  EXPECT_DOUBLE_EQ(p.shift_mass, 0.427);
  EXPECT_DOUBLE_EQ(p.g, 10.0);
}

TEST(Params, ConfigErrors) {
  EXPECT_THROW(RobotParams::from_config_text("radius 1\n"), std::invalid_argument);
  EXPECT_THROW(RobotParams::from_config_text("r_m abc\n"), std::invalid_argument);
  EXPECT_THROW(RobotParams::from_config_text("r_m -2\n"), std::invalid_argument);
  EXPECT_THROW(RobotParams::from_config_file("/nonexistent/robot.cfg"), std::runtime_error);
}

TEST(Params, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "arcroll_params_test.cfg";
  {
    std::ofstream(path) << "shift_mass_kg 2\n";
  }
  EXPECT_DOUBLE_EQ(RobotParams::from_config_file(path).shift_mass, 2.0);
  std::filesystem::remove(path);
}

TEST(MassConfig, DegreesSnapToArcEnds) {
  const MassConfig c = MassConfig::from_degrees(180.0, 0.0);
  EXPECT_EQ(c.theta1, kPi);
  EXPECT_EQ(c.theta2, 0.0);
  EXPECT_NO_THROW(c.validate());
  EXPECT_THROW(MassConfig::from_degrees(-1.0, 10.0).validate(), std::invalid_argument);
  EXPECT_THROW(MassConfig::from_degrees(10.0, 181.0).validate(), std::invalid_argument);
}
