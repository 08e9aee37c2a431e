#include "arcroll/routing.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace arcroll;
using arcroll::test::Rng;
using arcroll::test::random_eulerian;

namespace {

const char* kPrinted = "A1 C2 B1 D2 A1 B2 C1 A2 D1 B2 B1 A2 A1";

bool mentions(const RoutingReport& r, const std::string& what) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(what) != std::string::npos; });
}

}  // namespace

TEST(Routing, PrintedSequenceIsACircuit) {
  const RoutingReport r = validate_routing(parse_routing(kPrinted), CableNet::standard(0.2015));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Routing, ArrowSyntax) {
  const RoutingPath a = parse_routing("A1->C2 -> B1");
  const RoutingPath b = parse_routing("A1 \xE2\x86\x92 C2 \xE2\x86\x92 B1");
  ASSERT_EQ(a.vertices.size(), 3u);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(to_string(a), "A1 -> C2 -> B1");
  EXPECT_THROW(parse_routing("A1 X9"), std::invalid_argument);
}

TEST(Routing, RepeatedEdgeIsNamed) {
  // A1-C2 walked three times.
  const RoutingReport r =
      validate_routing(parse_routing("A1 C2 A1 C2 B1 D2 A1 B2 C1 A2 D1 B2 B1 A2 A1"), CableNet::standard(0.2));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "A1-C2 traversed 3 times"));
}

TEST(Routing, SkippedEdgeIsNamed) {
  const RoutingReport r =
      validate_routing(parse_routing("A1 C2 B1 D2 A1 B2 C1 A2 D1 B2 B1 A1"), CableNet::standard(0.2));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "A1-B1 is not an edge"));
  EXPECT_TRUE(mentions(r, "A1-A2 missing"));
  EXPECT_TRUE(mentions(r, "B1-A2 missing"));
}

TEST(Routing, OpenPathIsReported) {
  const RoutingReport r = validate_routing(parse_routing("A1 C2 B1"), CableNet::standard(0.2));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "not closed"));
}

TEST(Routing, HierholzerOnTheStandardNet) {
  const CableNet net = CableNet::standard(0.2015);
  const RoutingPath p = euler_circuit(net);
  EXPECT_EQ(p.vertices.size(), 13u);
  EXPECT_EQ(p.vertices.front(), parse_vertex("A1"));
  EXPECT_TRUE(validate_routing(p, net).ok);
}

TEST(Routing, FourCycle) {
  Multigraph g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  const auto walk = euler_circuit(g, 2);
  EXPECT_EQ(walk, (std::vector<int>{2, 1, 0, 3, 2}));
  EXPECT_TRUE(validate_circuit(walk, g).ok);
}

TEST(Routing, ParallelEdges) {
  Multigraph g{2, {{0, 1}, {1, 0}, {0, 1}, {0, 1}}};
  const auto walk = euler_circuit(g);
  EXPECT_EQ(walk.size(), 5u);
  EXPECT_TRUE(validate_circuit(walk, g).ok);
}

TEST(Routing, OddDegreesAreNamed) {
  const CableNet net = CableNet::parse("edge A1 A2 1 0\nedge A1 B2 1 0\nedge B1 A2 1 0\n", 0.2);
  try {
    euler_circuit(net);
    FAIL() << "expected NotEulerian";
  } catch (const NotEulerian& e) {
    EXPECT_EQ(e.odd_vertices.size(), 2u);
    EXPECT_NE(std::string(e.what()).find("B1 (degree 1)"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("B2 (degree 1)"), std::string::npos);
  }
}

TEST(Routing, DisconnectedGraph) {
  Multigraph g{4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}};
  EXPECT_THROW(euler_circuit(g), NotEulerian);
}

TEST(Routing, RandomEulerianGraphs) {
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Multigraph g = random_eulerian(rng);
    const auto walk = euler_circuit(g);
    EXPECT_EQ(walk.size(), g.edges.size() + 1);
    const RoutingReport r = validate_circuit(walk, g);
    EXPECT_TRUE(r.ok) << "graph " << i << ": " << (r.violations.empty() ? "" : r.violations.front());
  }
}
