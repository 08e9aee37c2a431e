#include "arcroll/formfinding.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace arcroll;
using arcroll::test::Rng;

namespace {

Vertex v(const char* s) { return parse_vertex(s); }

Screw default_screw() {
  // exp of a half turn about (1, 0, 1)/sqrt2 gives the default link transform.
  return Screw{Vec3(1, 0, 1).normalized() * kPi, Vec3::Zero()};
}

}  // namespace

TEST(Vertex, ParseAndPrint) {
  EXPECT_EQ(to_string(v("A1")), "A1");
  EXPECT_EQ(v("D2").anchor, Anchor::D);
  EXPECT_THROW(parse_vertex("d2"), std::invalid_argument);
  EXPECT_EQ(v("C2").link, Link::Two);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(vertex_index(vertex_at(i)), i);
  EXPECT_THROW(parse_vertex("E1"), std::invalid_argument);
  EXPECT_THROW(parse_vertex("A3"), std::invalid_argument);
  EXPECT_THROW(parse_vertex("A"), std::invalid_argument);
}

TEST(Anchors, OnTheArcCircle) {
  const double r = 0.2;
  for (auto layout : {AnchorLayout::AsPrinted, AnchorLayout::MirroredB}) {
    for (const Vec4& a : anchor_matrix(r, layout)) {
      EXPECT_NEAR(a.head<3>().norm(), r, 1e-15);
      EXPECT_EQ(a.z(), 0.0);
      EXPECT_EQ(a.w(), 1.0);
    }
  }
  EXPECT_LT(anchor_matrix(r)[1].y(), 0.0);
  EXPECT_GT(anchor_matrix(r, AnchorLayout::MirroredB)[1].y(), 0.0);
}

TEST(StandardNet, TwelveBipartiteCables) {
  const CableNet net = CableNet::standard(0.2015);
  ASSERT_EQ(net.size(), 12u);
  for (const Cable& c : net.cables()) {
    EXPECT_EQ(c.end1.link, Link::One);
    EXPECT_EQ(c.end2.link, Link::Two);
    EXPECT_EQ(c.stiffness, kDefaultCableStiffness);
  }
}

TEST(StandardNet, Degrees) {
  const CableNet net = CableNet::standard(0.2015);
  const std::map<std::string, int> expected{{"A1", 4}, {"B1", 4}, {"C1", 2}, {"D1", 2},
                                            {"A2", 4}, {"B2", 4}, {"C2", 2}, {"D2", 2}};
  int total = 0;
  for (const auto& [name, d] : expected) {
    EXPECT_EQ(net.degree(v(name.c_str())), d) << name;
    total += net.degree(v(name.c_str()));
  }
  EXPECT_EQ(total, 24);
}

TEST(StandardNet, FreeLengthClasses) {
  const CableNet net = CableNet::standard(0.2015);
  int long_cables = 0;
  for (const Cable& c : net.cables()) {
    const bool ends = (c.end1.anchor == Anchor::A || c.end1.anchor == Anchor::D) &&
                      (c.end2.anchor == Anchor::A || c.end2.anchor == Anchor::D);
    EXPECT_DOUBLE_EQ(c.free_length, ends ? 0.08255 : 0.0762);
    long_cables += ends;
  }
  EXPECT_EQ(long_cables, 3);
}

TEST(NetFile, RoundTrip) {
  const CableNet net = CableNet::standard(0.3, 42.0);
  const CableNet back = CableNet::parse(net.to_text(), 0.3);
  ASSERT_EQ(back.size(), net.size());
  for (size_t i = 0; i < net.size(); ++i) {
    EXPECT_EQ(back.cables()[i].end1, net.cables()[i].end1);
    EXPECT_EQ(back.cables()[i].end2, net.cables()[i].end2);
    EXPECT_EQ(back.cables()[i].stiffness, 42.0);
    EXPECT_EQ(back.cables()[i].free_length, net.cables()[i].free_length);
  }
}

TEST(NetFile, ReversedEndpointsAreNormalised) {
  const CableNet net = CableNet::parse("# one cable\nedge C2 B1 10 0.05\n", 0.2);
  EXPECT_EQ(net.cables()[0].end1, v("B1"));
  EXPECT_EQ(net.cables()[0].end2, v("C2"));
}

TEST(NetFile, Errors) {
  EXPECT_THROW(CableNet::parse("edge A1 B1 10 0.05\n", 0.2), std::invalid_argument);
  EXPECT_THROW(CableNet::parse("edge A1 B2 -1 0.05\n", 0.2), std::invalid_argument);
  EXPECT_THROW(CableNet::parse("edge A1 B2 10\n", 0.2), std::invalid_argument);
  EXPECT_THROW(CableNet::parse("cable A1 B2 10 0.05\n", 0.2), std::invalid_argument);
  EXPECT_THROW(CableNet::parse("# nothing\n", 0.2), std::invalid_argument);
}

TEST(Energy, ZeroWhenRiggedAtTheTransform) {
  const CableNet net = rigged_at(CableNet::standard(0.2015), default_link_transform());
  EXPECT_NEAR(energy(default_link_transform(), net), 0.0, 1e-28);
  EXPECT_GT(energy(Transform3::identity(), net), 1e-3);
}

TEST(Energy, RiggedLengthsAtUnitRadius) {
  const CableNet net = rigged_at(CableNet::standard(1.0), default_link_transform());
  std::map<long, int> counts;
  for (const Cable& c : net.cables()) counts[std::lround(c.free_length * 1e4)]++;
  // Mostly sqrt2 r and r/sqrt2 apart, plus one longer diagonal.
  for (const auto& [len, n] : counts) {
    EXPECT_TRUE(len == 14142 || len == 7071 || len == 18708) << len << " x" << n;
  }
}

TEST(Energy, PermutationInvariant) {
  const CableNet net = CableNet::standard(0.2015);
  std::vector<Cable> shuffled = net.cables();
  std::reverse(shuffled.begin(), shuffled.end());
  std::rotate(shuffled.begin(), shuffled.begin() + 5, shuffled.end());
  const CableNet other(net.r(), shuffled);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const Screw xi{rng.unit() * rng.uniform(0, 3), rng.unit() * 0.1};
    EXPECT_NEAR(energy(xi, net), energy(xi, other), 1e-12);
  }
}

TEST(Energy, ScalesWithStiffness) {
  const Screw xi{Vec3(0.3, -0.2, 1.0), Vec3(0.01, 0.02, -0.03)};
  EXPECT_NEAR(energy(xi, CableNet::standard(0.2, 300.0)), 3.0 * energy(xi, CableNet::standard(0.2, 100.0)),
              1e-12);
}

TEST(Energy, MirrorTwinHasEqualEnergy) {
  const CableNet net = CableNet::standard(0.2015);
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Screw xi{rng.unit() * rng.uniform(0, 3), rng.unit() * 0.1};
    EXPECT_NEAR(energy(xi, net), energy(mirror_across_link1_plane(xi), net), 1e-12);
  }
}

TEST(Energy, GradientMatchesDirectionalDifference) {
  const CableNet net = CableNet::standard(0.2015);
  const Screw xi{Vec3(0.4, 1.1, -0.6), Vec3(0.02, -0.05, 0.01)};
  const Gradient6 g = energy_gradient_fd(xi, net);
  Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    Gradient6 d;
    d << rng.unit(), rng.unit();
    const double h = 1e-5;
    Screw plus = xi, minus = xi;
    plus.angular += h * d.head<3>();
    plus.linear += h * d.tail<3>();
    minus.angular -= h * d.head<3>();
    minus.linear -= h * d.tail<3>();
    const double dd = (energy(plus, net) - energy(minus, net)) / (2 * h);
    EXPECT_NEAR(g.dot(d), dd, 1e-6 * std::max(1.0, std::abs(dd)));
  }
}

TEST(FormFind, DefaultScrewReproducesTheLinkTransform) {
  const Transform3 t = exp_screw(default_screw());
  EXPECT_LT((t.matrix() - default_link_transform().matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FormFind, RecoversRiggedTransform) {
  const CableNet net = rigged_at(CableNet::standard(0.2015), default_link_transform());
  const FormFindResult r = form_find(net, Screw{});
  EXPECT_TRUE(r.converged);
  EXPECT_LT(rotation_distance(r.t12.rotation, default_link_transform().rotation), 1e-3);
  EXPECT_LT(r.t12.translation.norm(), 1e-6);
  EXPECT_EQ(r.restarts.size(), 5u);
}

TEST(FormFind, RecoversAnArbitraryRiggedTransform) {
  const Transform3 target = exp_screw(Screw{Vec3(0.4, -1.2, 0.9), Vec3(0.03, -0.02, 0.05)});
  const CableNet net = rigged_at(CableNet::standard(0.25), target);
  FormFindOptions o;
  o.restarts = 8;
  const FormFindResult r = form_find(net, Screw{}, o);
  EXPECT_LT(r.energy, 1e-14);
  // Either the target or its mirror twin; both have zero energy.
  const Screw twin = mirror_across_link1_plane(Screw{Vec3(0.4, -1.2, 0.9), Vec3(0.03, -0.02, 0.05)});
  const Transform3 mirrored = exp_screw(twin);
  const double d = std::min((r.t12.matrix() - target.matrix()).norm(), (r.t12.matrix() - mirrored.matrix()).norm());
  EXPECT_LT(d, 1e-5);
}

TEST(FormFind, DeterministicForASeed) {
  const CableNet net = CableNet::standard(0.2015);
  FormFindOptions o;
  o.seed = 77;
  const FormFindResult a = form_find(net, Screw{}, o);
  const FormFindResult b = form_find(net, Screw{}, o);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.best_restart, b.best_restart);
  EXPECT_EQ(a.t12.matrix(), b.t12.matrix());
}

TEST(FormFind, PrintedNetIsStationary) {
  const CableNet net = CableNet::standard(0.2015);
  const FormFindResult r = form_find(net, Screw{});
  EXPECT_TRUE(r.converged);
  EXPECT_LT(energy_gradient_fd(r.xi, net).norm(), 1e-6);
  EXPECT_LE(r.energy, r.initial_energy);
  for (const RestartOutcome& o : r.restarts) EXPECT_GE(o.energy, r.energy - 1e-12 * std::max(1.0, r.energy));
}

TEST(FormFind, RejectsBadOptions) {
  FormFindOptions o;
  o.restarts = 0;
  EXPECT_THROW(form_find(CableNet::standard(0.2), Screw{}, o), std::invalid_argument);
}
