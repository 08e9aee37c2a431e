#pragma once

#include "arcroll/formfinding.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcroll {

/// Undirected multigraph on vertices 0..vertex_count-1.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

Multigraph to_multigraph(const CableNet& net);

class NotEulerian : public std::runtime_error {
 public:
  NotEulerian(const std::string& what, std::vector<int> odd)
      : std::runtime_error(what), odd_vertices(std::move(odd)) {}
  std::vector<int> odd_vertices;
};

// Closed walk using every edge exactly once (Hierholzer). Starts at `start`,
// or at the lowest-numbered vertex with an edge when start < 0. Deterministic:
// edges leaving a vertex are taken in input order.
std::vector<int> euler_circuit(const Multigraph& g, int start = -1);

struct RoutingPath {
  std::vector<Vertex> vertices;  // closed: front() == back()
};

// Circuit through the cable net, starting at A1 when A1 carries a cable.
RoutingPath euler_circuit(const CableNet& net);

// Accepts "A1 C2 B1", "A1->C2->B1" or "A1 → C2 → B1".
RoutingPath parse_routing(std::string_view text);
std::string to_string(const RoutingPath& path);

struct RoutingReport {
  bool ok = true;
  std::vector<std::string> violations;
};

RoutingReport validate_circuit(const std::vector<int>& walk, const Multigraph& g);
// Checks adjacency, closure, and that every cable is traversed exactly once.
RoutingReport validate_routing(const RoutingPath& path, const CableNet& net);

}  // namespace arcroll
