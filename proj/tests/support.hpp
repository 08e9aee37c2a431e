#pragma once

#include "arcroll/geometry.hpp"
#include "arcroll/routing.hpp"

#include <random>

namespace arcroll::test {

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  Vec3 unit() {
    std::normal_distribution<double> n;
    Vec3 v;
    do {
      v = Vec3(n(gen), n(gen), n(gen));
    } while (v.norm() < 1e-6);
    return v.normalized();
  }

  std::mt19937_64 gen;
};

inline double orthogonality_error(const Mat3& m) {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

// Random connected multigraph with all degrees even: a union of closed walks
// that each start on a vertex already touched.
inline Multigraph random_eulerian(Rng& rng) {
  Multigraph g;
  g.vertex_count = rng.integer(2, 12);
  std::vector<int> touched{0};
  const int walks = rng.integer(1, 6);
  for (int w = 0; w < walks; ++w) {
    const int start = touched[static_cast<size_t>(rng.integer(0, static_cast<int>(touched.size()) - 1))];
    int at = start;
    const int len = rng.integer(2, 8);
    for (int k = 0; k < len; ++k) {
      int next = rng.integer(0, g.vertex_count - 1);
      if (next == at) next = (at + 1) % g.vertex_count;
      g.edges.emplace_back(at, next);
      touched.push_back(next);
      at = next;
    }
    if (at != start) g.edges.emplace_back(at, start);
  }
  return g;
}

}  // namespace arcroll::test
