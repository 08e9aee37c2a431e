#pragma once

#include "arcroll/statics.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace arcroll {

struct SweepRecord {
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  HybridState state = HybridState::PivotA2;
  double phi1_deg = 0.0;
  double phi2_deg = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  bool boundary = false;
  bool degenerate = false;

  double free_phi_deg() const { return info(state).rolling == Link::One ? phi1_deg : phi2_deg; }
};

struct SweepResult {
  double step_deg = 0.0;
  int samples_per_axis = 0;  // theta values 0, step, ..., 180
  std::vector<SweepRecord> records;  // theta1-major, then theta2, then state
};

// Throws std::invalid_argument unless step divides 180 degrees.
SweepResult sweep(const RobotParams& p, double step_deg);

struct BoundaryLine {
  HybridState state = HybridState::PivotA2;
  std::vector<std::pair<double, double>> points;  // (theta1_deg, theta2_deg)
};

// Maximal straight runs (row, column or diagonal) of neighbouring grid cells
// whose free contact angle sits on an arc end. Runs have at least two cells.
std::vector<BoundaryLine> boundaries(const SweepResult& s);

struct PathSample {
  size_t index = 0;
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  HybridState state = HybridState::PivotA2;
  double phi1_deg = 0.0;
  double phi2_deg = 0.0;
  Vec3 z_b = Vec3::Zero();
};

struct PathEvent {
  TransitionEvent transition;
  double theta1_deg = 0.0;  // refined crossing location
  double theta2_deg = 0.0;
  size_t sample_index = 0;  // first sample in the new state
};

struct PathTrace {
  std::vector<PathSample> samples;
  std::vector<PathEvent> events;
  bool truncated = false;
  std::string diagnostic;
};

using Waypoint = std::pair<double, double>;  // (theta1_deg, theta2_deg)

// Lines "theta1_deg theta2_deg"; '#' comments.
std::vector<Waypoint> parse_waypoints(const std::string& text);

// Quasi-static walk through straight segments between waypoints, sampled no
// more than `step_deg` apart. Crossings of the free contact angle through an
// arc end are located by bisection and fire the hybrid transition.
PathTrace run_path(const RobotParams& p, const std::vector<Waypoint>& waypoints,
                   HybridState start, double step_deg);

struct ValidationRecord {
  size_t line = 0;
  double theta1_deg = 0.0;
  double theta2_deg = 0.0;
  HybridState state = HybridState::PivotA2;
  double phi1_meas_deg = 0.0;
  double phi2_meas_deg = 0.0;
  double phi1_model_deg = 0.0;
  double phi2_model_deg = 0.0;
  double abs_error_deg = 0.0;  // on the free contact angle of `state`
};

struct RowIssue {
  size_t line = 0;
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationRecord> records;
  std::vector<RowIssue> skipped;
  double mae_deg = 0.0;
};

// CSV columns theta1_deg,theta2_deg,state,phi1_meas_deg,phi2_meas_deg; an
// optional header line is recognised by its first field.
ValidationReport validate(const RobotParams& p, const std::string& csv);
ValidationReport validate_file(const RobotParams& p, const std::filesystem::path& path);

// Model predictions at random interior configurations, the free contact angle
// perturbed by U(-noise, noise) and clamped to [0, 180].
std::string synthesize_dataset(const RobotParams& p, int rows, double noise_deg, std::uint64_t seed);

}  // namespace arcroll
