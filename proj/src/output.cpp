#include "arcroll/output.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace arcroll {

using nlohmann::json;

namespace {

constexpr double kPanel = 360.0;  // px per heatmap panel
constexpr double kMargin = 40.0;

const char* flag(bool b) { return b ? "1" : "0"; }

// Keeps values that round to zero at 9 decimals from printing as "-0.000000000".
double nz(double x) { return std::abs(x) < 5e-10 ? 0.0 : x; }

json vec_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

std::string heat_color(double phi_deg) {
  const double t = std::clamp(phi_deg / 180.0, 0.0, 1.0);
  return fmt::format("hsl({:.1f},80%,50%)", 240.0 * (1.0 - t));
}

const char* state_color(HybridState s) {
  switch (s) {
    case HybridState::PivotA2: return "#1f77b4";
    case HybridState::PivotB2: return "#ff7f0e";
    case HybridState::PivotA1: return "#2ca02c";
    case HybridState::PivotB1: return "#d62728";
  }
  return "#000000";
}

std::string pivot_name(HybridState s) { return std::string(info(s).pivot); }

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "svg") return Format::Svg;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << "theta1_deg,theta2_deg,state,phi1_deg,phi2_deg,n1_N,n2_N,degenerate\n";
  for (const SweepRecord& r : s.records) {
    fmt::print(os, "{:.6f},{:.6f},{},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", r.theta1_deg, r.theta2_deg,
               state_id(r.state), r.phi1_deg, r.phi2_deg, r.n1, r.n2, flag(r.degenerate));
  }
}

void write_sweep_json(std::ostream& os, const SweepResult& s, const std::vector<BoundaryLine>& lines) {
  json j;
  j["step_deg"] = s.step_deg;
  j["samples_per_axis"] = s.samples_per_axis;
  json recs = json::array();
  for (const SweepRecord& r : s.records) {
    recs.push_back({{"theta1_deg", r.theta1_deg},
                    {"theta2_deg", r.theta2_deg},
                    {"state", state_id(r.state)},
                    {"phi1_deg", r.phi1_deg},
                    {"phi2_deg", r.phi2_deg},
                    {"n1_N", r.n1},
                    {"n2_N", r.n2},
                    {"boundary", r.boundary},
                    {"degenerate", r.degenerate}});
  }
  j["records"] = std::move(recs);
  std::ostringstream b;
  write_boundaries_json(b, lines);
  j["boundaries"] = json::parse(b.str());
  os << j.dump(2) << '\n';
}

void write_sweep_svg(std::ostream& os, const SweepResult& s, const std::vector<BoundaryLine>& lines) {
  const double cell = kPanel / static_cast<double>(s.samples_per_axis);
  const double width = 2 * kPanel + 3 * kMargin;
  const double height = 2 * kPanel + 3 * kMargin;
  auto origin = [&](HybridState st) {
    const int k = state_id(st) - 1;
    return std::make_pair(kMargin + (k % 2) * (kPanel + kMargin), kMargin + (k / 2) * (kPanel + kMargin));
  };
  // theta1 runs right, theta2 runs up.
  auto px = [&](HybridState st, double t1, double t2) {
    const auto [ox, oy] = origin(st);
    const double scale = (kPanel - cell) / 180.0;
    return std::make_pair(ox + cell / 2 + t1 * scale, oy + kPanel - cell / 2 - t2 * scale);
  };

  fmt::print(os,
             "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
             "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
             width, height, width, height);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (HybridState st : kAllStates) {
    const auto [ox, oy] = origin(st);
    fmt::print(os,
               "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"13\">"
               "state {} (pivot {}): free contact angle, theta1 &#8594; theta2 &#8593;</text>\n",
               ox, oy - 8, state_id(st), pivot_name(st));
  }
  os << "<g class=\"cells\">\n";
  for (const SweepRecord& r : s.records) {
    const auto [cx, cy] = px(r.state, r.theta1_deg, r.theta2_deg);
    const std::string fill = r.degenerate ? std::string("#888888") : heat_color(r.free_phi_deg());
    fmt::print(os, "<rect class=\"cell\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n",
               cx - cell / 2, cy - cell / 2, cell, cell, fill);
  }
  os << "</g>\n<g class=\"boundaries\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"4 3\">\n";
  for (const BoundaryLine& l : lines) {
    os << "<polyline points=\"";
    for (size_t i = 0; i < l.points.size(); ++i) {
      const auto [x, y] = px(l.state, l.points[i].first, l.points[i].second);
      fmt::print(os, "{}{:.3f},{:.3f}", i ? " " : "", x, y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

void write_boundaries_csv(std::ostream& os, const std::vector<BoundaryLine>& lines) {
  os << "line,state,theta1_deg,theta2_deg\n";
  for (size_t i = 0; i < lines.size(); ++i) {
    for (const auto& [t1, t2] : lines[i].points) {
      fmt::print(os, "{},{},{:.6f},{:.6f}\n", i, state_id(lines[i].state), t1, t2);
    }
  }
}

void write_boundaries_json(std::ostream& os, const std::vector<BoundaryLine>& lines) {
  json arr = json::array();
  for (const BoundaryLine& l : lines) {
    json pts = json::array();
    for (const auto& [t1, t2] : l.points) pts.push_back(json::array({t1, t2}));
    arr.push_back({{"state", state_id(l.state)}, {"points_deg", std::move(pts)}});
  }
  os << arr.dump(2) << '\n';
}

void write_equilibrium_csv(std::ostream& os, double theta1_deg, double theta2_deg,
                           const std::array<ContactSolution, 4>& sols) {
  os << "theta1_deg,theta2_deg,state,pivot,phi1_deg,phi2_deg,n1_N,n2_N,zb_x,zb_y,zb_z,boundary,"
        "degenerate,valid\n";
  for (const ContactSolution& s : sols) {
    const Vec3& z = s.normal.z_b;
    fmt::print(os, "{:.6f},{:.6f},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.9f},{:.9f},{:.9f},{},{},{}\n",
               theta1_deg, theta2_deg, state_id(s.state), pivot_name(s.state), rad2deg(s.phi.phi1),
               rad2deg(s.phi.phi2), s.n1, s.n2, nz(z.x()), nz(z.y()), nz(z.z()), flag(s.boundary),
               flag(s.degenerate), flag(s.valid));
  }
}

void write_equilibrium_json(std::ostream& os, double theta1_deg, double theta2_deg,
                            const std::array<ContactSolution, 4>& sols) {
  json arr = json::array();
  for (const ContactSolution& s : sols) {
    arr.push_back({{"state", state_id(s.state)},
                   {"pivot", pivot_name(s.state)},
                   {"rolling_link", index_of(info(s.state).rolling)},
                   {"phi1_deg", rad2deg(s.phi.phi1)},
                   {"phi2_deg", rad2deg(s.phi.phi2)},
                   {"n1_N", s.n1},
                   {"n2_N", s.n2},
                   {"z_b", vec_json(s.normal.z_b)},
                   {"boundary", s.boundary},
                   {"degenerate", s.degenerate},
                   {"valid", s.valid}});
  }
  json j{{"theta1_deg", theta1_deg}, {"theta2_deg", theta2_deg}, {"solutions", std::move(arr)}};
  os << j.dump(2) << '\n';
}

void write_path_csv(std::ostream& os, const PathTrace& t) {
  os << "index,theta1_deg,theta2_deg,state,phi1_deg,phi2_deg,zb_x,zb_y,zb_z\n";
  for (const PathSample& s : t.samples) {
    fmt::print(os, "{},{:.6f},{:.6f},{},{:.6f},{:.6f},{:.9f},{:.9f},{:.9f}\n", s.index, s.theta1_deg,
               s.theta2_deg, state_id(s.state), s.phi1_deg, s.phi2_deg, nz(s.z_b.x()), nz(s.z_b.y()), nz(s.z_b.z()));
  }
}

void write_path_json(std::ostream& os, const PathTrace& t) {
  json samples = json::array();
  for (const PathSample& s : t.samples) {
    samples.push_back({{"index", s.index},
                       {"theta1_deg", s.theta1_deg},
                       {"theta2_deg", s.theta2_deg},
                       {"state", state_id(s.state)},
                       {"phi1_deg", s.phi1_deg},
                       {"phi2_deg", s.phi2_deg},
                       {"z_b", vec_json(s.z_b)}});
  }
  json events = json::array();
  for (const PathEvent& e : t.events) {
    events.push_back({{"from", state_id(e.transition.from)},
                      {"to", state_id(e.transition.to)},
                      {"boundary_link", index_of(e.transition.boundary_link)},
                      {"boundary_deg", rad2deg(e.transition.boundary_value)},
                      {"direction", e.transition.direction},
                      {"theta1_deg", e.theta1_deg},
                      {"theta2_deg", e.theta2_deg},
                      {"sample_index", e.sample_index}});
  }
  json j{{"samples", std::move(samples)}, {"events", std::move(events)}, {"truncated", t.truncated}};
  if (t.truncated) j["diagnostic"] = t.diagnostic;
  os << j.dump(2) << '\n';
}

void write_path_svg(std::ostream& os, const PathTrace& t) {
  const double size = kPanel + 2 * kMargin;
  auto px = [&](double t1, double t2) {
    return std::make_pair(kMargin + t1 * kPanel / 180.0, kMargin + kPanel - t2 * kPanel / 180.0);
  };
  fmt::print(os,
             "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{0:.0f}\" "
             "viewBox=\"0 0 {0:.0f} {0:.0f}\">\n",
             size);
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  fmt::print(os,
             "<rect x=\"{0:.1f}\" y=\"{0:.1f}\" width=\"{1:.1f}\" height=\"{1:.1f}\" fill=\"none\" "
             "stroke=\"black\"/>\n",
             kMargin, kPanel);
  // Boundary diagonals of the free contact angle.
  const auto [ax, ay] = px(0, 0);
  const auto [bx, by] = px(180, 180);
  const auto [cx, cy] = px(0, 180);
  const auto [dx, dy] = px(180, 0);
  fmt::print(os,
             "<g stroke=\"red\" stroke-dasharray=\"4 3\"><line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" "
             "y2=\"{:.1f}\"/><line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\"/></g>\n",
             ax, ay, bx, by, cx, cy, dx, dy);
  fmt::print(os,
             "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"13\">"
             "quasi-static path in (theta1, theta2), colored by state</text>\n",
             kMargin, kMargin - 10);
  os << "<g class=\"samples\">\n";
  for (const PathSample& s : t.samples) {
    const auto [x, y] = px(s.theta1_deg, s.theta2_deg);
    fmt::print(os, "<circle class=\"sample\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"2.5\" fill=\"{}\"/>\n", x, y,
               state_color(s.state));
  }
  os << "</g>\n<g class=\"events\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const PathEvent& e : t.events) {
    const auto [x, y] = px(e.theta1_deg, e.theta2_deg);
    fmt::print(os, "<path class=\"event\" d=\"M{:.3f},{:.3f} l8,8 m0,-8 l-8,8\"><title>{} to {}</title></path>\n",
               x - 4, y - 4, state_id(e.transition.from), state_id(e.transition.to));
  }
  os << "</g>\n</svg>\n";
}

void write_validation_csv(std::ostream& os, const ValidationReport& r) {
  os << "line,theta1_deg,theta2_deg,state,phi1_meas_deg,phi2_meas_deg,phi1_model_deg,phi2_model_deg,"
        "abs_error_deg\n";
  for (const ValidationRecord& v : r.records) {
    fmt::print(os, "{},{:.6f},{:.6f},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", v.line, v.theta1_deg,
               v.theta2_deg, state_id(v.state), v.phi1_meas_deg, v.phi2_meas_deg, v.phi1_model_deg,
               v.phi2_model_deg, v.abs_error_deg);
  }
  fmt::print(os, "# mae_deg,{:.6f}\n# rows,{}\n# skipped,{}\n", r.mae_deg, r.records.size(),
             r.skipped.size());
}

void write_validation_json(std::ostream& os, const ValidationReport& r) {
  json recs = json::array();
  for (const ValidationRecord& v : r.records) {
    recs.push_back({{"line", v.line},
                    {"theta1_deg", v.theta1_deg},
                    {"theta2_deg", v.theta2_deg},
                    {"state", state_id(v.state)},
                    {"phi1_meas_deg", v.phi1_meas_deg},
                    {"phi2_meas_deg", v.phi2_meas_deg},
                    {"phi1_model_deg", v.phi1_model_deg},
                    {"phi2_model_deg", v.phi2_model_deg},
                    {"abs_error_deg", v.abs_error_deg}});
  }
  json skipped = json::array();
  for (const RowIssue& i : r.skipped) skipped.push_back({{"line", i.line}, {"reason", i.reason}});
  json j{{"mae_deg", r.mae_deg}, {"records", std::move(recs)}, {"skipped", std::move(skipped)}};
  os << j.dump(2) << '\n';
}

void write_formfind_csv(std::ostream& os, const FormFindResult& r, const CableNet& net) {
  os << "cable,end1,end2,stiffness_N_per_m,free_length_m,length_m\n";
  const auto lengths = cable_lengths(r.t12, net);
  for (size_t i = 0; i < net.size(); ++i) {
    const Cable& c = net.cables()[i];
    fmt::print(os, "{},{},{},{:.6f},{:.6f},{:.9f}\n", i, to_string(c.end1), to_string(c.end2),
               c.stiffness, c.free_length, lengths[i]);
  }
  const Mat3 R = r.t12.rotation.matrix();
  const Vec3& o = r.t12.translation;
  fmt::print(os, "# energy_J,{:.12g}\n# gradient_norm,{:.3e}\n# converged,{}\n# best_restart,{}\n",
             r.energy, r.gradient_norm, flag(r.converged), r.best_restart);
  fmt::print(os, "# rotation,{:.9f},{:.9f},{:.9f},{:.9f},{:.9f},{:.9f},{:.9f},{:.9f},{:.9f}\n", nz(R(0, 0)),
             nz(R(0, 1)), nz(R(0, 2)), nz(R(1, 0)), nz(R(1, 1)), nz(R(1, 2)), nz(R(2, 0)), nz(R(2, 1)),
             nz(R(2, 2)));
  fmt::print(os, "# translation_m,{:.9f},{:.9f},{:.9f}\n", nz(o.x()), nz(o.y()), nz(o.z()));
  fmt::print(os, "# rotation_deviation_from_default_rad,{:.9f}\n",
             rotation_distance(r.t12.rotation, default_link_transform().rotation));
}

void write_formfind_json(std::ostream& os, const FormFindResult& r, const CableNet& net) {
  const Mat3 R = r.t12.rotation.matrix();
  json rot = json::array();
  for (int i = 0; i < 3; ++i) rot.push_back(json::array({R(i, 0), R(i, 1), R(i, 2)}));
  json cables = json::array();
  const auto lengths = cable_lengths(r.t12, net);
  for (size_t i = 0; i < net.size(); ++i) {
    const Cable& c = net.cables()[i];
    cables.push_back({{"end1", to_string(c.end1)},
                      {"end2", to_string(c.end2)},
                      {"stiffness_N_per_m", c.stiffness},
                      {"free_length_m", c.free_length},
                      {"length_m", lengths[i]}});
  }
  json restarts = json::array();
  for (const RestartOutcome& o : r.restarts) {
    restarts.push_back({{"index", o.index},
                        {"energy_J", o.energy},
                        {"gradient_norm", o.gradient_norm},
                        {"iterations", o.iterations},
                        {"converged", o.converged}});
  }
  json j{{"energy_J", r.energy},
         {"initial_energy_J", r.initial_energy},
         {"gradient_norm", r.gradient_norm},
         {"converged", r.converged},
         {"best_restart", r.best_restart},
         {"screw", {{"angular", vec_json(r.xi.angular)}, {"linear", vec_json(r.xi.linear)}}},
         {"rotation", std::move(rot)},
         {"translation_m", vec_json(r.t12.translation)},
         {"rotation_deviation_from_default_rad",
          rotation_distance(r.t12.rotation, default_link_transform().rotation)},
         {"cables", std::move(cables)},
         {"restarts", std::move(restarts)}};
  os << j.dump(2) << '\n';
}

void write_route_csv(std::ostream& os, const RoutingPath& path) {
  os << "step,vertex\n";
  for (size_t i = 0; i < path.vertices.size(); ++i) fmt::print(os, "{},{}\n", i, to_string(path.vertices[i]));
}

void write_route_json(std::ostream& os, const RoutingPath& path, const RoutingReport& report) {
  json verts = json::array();
  for (const Vertex& v : path.vertices) verts.push_back(to_string(v));
  json j{{"path", std::move(verts)}, {"valid", report.ok}, {"violations", report.violations}};
  os << j.dump(2) << '\n';
}

}  // namespace arcroll
