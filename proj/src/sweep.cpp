#include "arcroll/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace arcroll {

namespace {

SweepRecord make_record(const RobotParams& p, double t1_deg, double t2_deg, HybridState s) {
  const ContactSolution sol = solve_equilibrium(p, s, MassConfig::from_degrees(t1_deg, t2_deg));
  SweepRecord rec;
  rec.theta1_deg = t1_deg;
  rec.theta2_deg = t2_deg;
  rec.state = s;
  rec.phi1_deg = rad2deg(sol.phi.phi1);
  rec.phi2_deg = rad2deg(sol.phi.phi2);
  rec.n1 = sol.n1;
  rec.n2 = sol.n2;
  rec.boundary = sol.boundary;
  rec.degenerate = sol.degenerate;
  return rec;
}

}  // namespace

SweepResult sweep(const RobotParams& p, double step_deg) {
  p.validate();
  if (!(step_deg > 0.0) || step_deg > 180.0) {
    throw std::invalid_argument("sweep step must lie in (0, 180] degrees");
  }
  const double count = 180.0 / step_deg;
  const long n = std::lround(count);
  if (std::abs(count - static_cast<double>(n)) > 1e-9) {
    throw std::invalid_argument("sweep step must divide 180 degrees evenly");
  }

  SweepResult out;
  out.step_deg = step_deg;
  out.samples_per_axis = static_cast<int>(n + 1);
  const auto axis = static_cast<size_t>(n + 1);
  auto theta = [n](size_t i) { return 180.0 * static_cast<double>(i) / static_cast<double>(n); };

  out.records.resize(axis * axis * kAllStates.size());
  auto fill_rows = [&](size_t first, size_t last) {
    for (size_t i = first; i < last; ++i) {
      for (size_t j = 0; j < axis; ++j) {
        for (size_t k = 0; k < kAllStates.size(); ++k) {
          out.records[(i * axis + j) * kAllStates.size() + k] =
              make_record(p, theta(i), theta(j), kAllStates[k]);
        }
      }
    }
  };

  const size_t workers =
      std::clamp<size_t>(std::thread::hardware_concurrency(), size_t{1}, axis);
  std::vector<std::future<void>> jobs;
  const size_t chunk = (axis + workers - 1) / workers;
  for (size_t first = 0; first < axis; first += chunk) {
    jobs.push_back(std::async(std::launch::async, fill_rows, first, std::min(axis, first + chunk)));
  }
  for (auto& j : jobs) j.get();
  return out;
}

std::vector<BoundaryLine> boundaries(const SweepResult& s) {
  const int n = s.samples_per_axis;
  std::vector<BoundaryLine> lines;
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};

  for (size_t k = 0; k < kAllStates.size(); ++k) {
    auto on_edge = [&](int i, int j) {
      if (i < 0 || j < 0 || i >= n || j >= n) return false;
      const SweepRecord& r =
          s.records[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
                        kAllStates.size() +
                    k];
      return r.boundary || r.degenerate;
    };
    auto at = [&](int i, int j) {
      const SweepRecord& r =
          s.records[(static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)) *
                    kAllStates.size()];
      return std::make_pair(r.theta1_deg, r.theta2_deg);
    };

    for (const auto& d : dirs) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          // Only start at the first cell of a run.
          if (!on_edge(i, j) || on_edge(i - d[0], j - d[1])) continue;
          BoundaryLine line;
          line.state = kAllStates[k];
          for (int a = i, b = j; on_edge(a, b); a += d[0], b += d[1]) line.points.push_back(at(a, b));
          if (line.points.size() >= 2) lines.push_back(std::move(line));
        }
      }
    }
  }
  return lines;
}

}  // namespace arcroll
