#include "arcroll/routing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace arcroll {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey key_of(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

RoutingReport validate_walk(const std::vector<int>& walk, const Multigraph& g,
                            const std::function<std::string(int)>& name) {
  RoutingReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  auto edge_name = [&](const EdgeKey& e) { return name(e.first) + "-" + name(e.second); };

  std::map<EdgeKey, int> available;
  for (const auto& [a, b] : g.edges) ++available[key_of(a, b)];

  if (walk.size() < 2) {
    fail("path has fewer than two vertices");
    return rep;
  }
  if (walk.front() != walk.back()) {
    fail("path is not closed: starts at " + name(walk.front()) + ", ends at " + name(walk.back()));
  }

  std::map<EdgeKey, int> used;
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    const EdgeKey e = key_of(walk[i], walk[i + 1]);
    if (!available.count(e)) {
      fail("step " + std::to_string(i + 1) + ": " + edge_name(e) + " is not an edge");
      continue;
    }
    ++used[e];
  }
  for (const auto& [e, n] : available) {
    const int u = used.count(e) ? used.at(e) : 0;
    if (u > n) {
      fail("edge " + edge_name(e) + " traversed " + std::to_string(u) + " times, exists " +
           std::to_string(n));
    } else if (u < n) {
      fail("edge " + edge_name(e) + " missing (" + std::to_string(n - u) + " untraversed)");
    }
  }
  return rep;
}

}  // namespace

Multigraph to_multigraph(const CableNet& net) {
  Multigraph g;
  g.vertex_count = 8;
  for (const Cable& c : net.cables()) g.edges.emplace_back(vertex_index(c.end1), vertex_index(c.end2));
  return g;
}

std::vector<int> euler_circuit(const Multigraph& g, int start) {
  if (g.edges.empty()) throw NotEulerian("graph has no edges", {});
  std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(g.vertex_count));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    if (a < 0 || b < 0 || a >= g.vertex_count || b >= g.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    adj[static_cast<size_t>(a)].emplace_back(b, e);
    adj[static_cast<size_t>(b)].emplace_back(a, e);
  }

  std::vector<int> odd;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (adj[static_cast<size_t>(v)].size() % 2 != 0) odd.push_back(v);
  }
  if (!odd.empty()) {
    std::string names;
    for (int v : odd) names += (names.empty() ? "" : ", ") + std::to_string(v);
    throw NotEulerian("odd-degree vertices: " + names, odd);
  }

  if (start < 0) {
    for (int v = 0; v < g.vertex_count; ++v) {
      if (!adj[static_cast<size_t>(v)].empty()) {
        start = v;
        break;
      }
    }
  }
  if (start >= g.vertex_count || adj[static_cast<size_t>(start)].empty()) {
    throw std::invalid_argument("start vertex has no edges");
  }

  std::vector<bool> used(g.edges.size(), false);
  std::vector<size_t> next(static_cast<size_t>(g.vertex_count), 0);
  std::vector<int> stack{start};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const auto v = static_cast<size_t>(stack.back());
    auto& cursor = next[v];
    while (cursor < adj[v].size() && used[adj[v][cursor].second]) ++cursor;
    if (cursor == adj[v].size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      const auto [to, e] = adj[v][cursor];
      used[e] = true;
      stack.push_back(to);
    }
  }
  if (circuit.size() != g.edges.size() + 1) throw NotEulerian("graph is not connected", {});
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

RoutingPath euler_circuit(const CableNet& net) {
  const Vertex a1{Link::One, Anchor::A};
  const int start = net.degree(a1) > 0 ? vertex_index(a1) : -1;
  std::vector<int> walk;
  try {
    walk = euler_circuit(to_multigraph(net), start);
  } catch (const NotEulerian& e) {
    if (e.odd_vertices.empty()) throw;
    std::string names;
    for (int v : e.odd_vertices) {
      names += (names.empty() ? "" : ", ") + to_string(vertex_at(v)) + " (degree " +
               std::to_string(net.degree(vertex_at(v))) + ")";
    }
    throw NotEulerian("cable net has odd-degree anchors: " + names, e.odd_vertices);
  }
  RoutingPath path;
  for (int v : walk) path.vertices.push_back(vertex_at(v));
  return path;
}

RoutingPath parse_routing(std::string_view text) {
  std::string s(text);
  for (const std::string arrow : {"\xE2\x86\x92", "->", ","}) {
    for (size_t pos; (pos = s.find(arrow)) != std::string::npos;) s.replace(pos, arrow.size(), " ");
  }
  RoutingPath path;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) path.vertices.push_back(parse_vertex(tok));
  return path;
}

std::string to_string(const RoutingPath& path) {
  std::string out;
  for (const Vertex& v : path.vertices) out += (out.empty() ? "" : " -> ") + to_string(v);
  return out;
}

RoutingReport validate_circuit(const std::vector<int>& walk, const Multigraph& g) {
  return validate_walk(walk, g, [](int v) { return std::to_string(v); });
}

RoutingReport validate_routing(const RoutingPath& path, const CableNet& net) {
  std::vector<int> walk;
  for (const Vertex& v : path.vertices) walk.push_back(vertex_index(v));
  return validate_walk(walk, to_multigraph(net), [](int v) { return to_string(vertex_at(v)); });
}

}  // namespace arcroll
