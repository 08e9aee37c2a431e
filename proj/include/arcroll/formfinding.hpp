#pragma once

#include "arcroll/geometry.hpp"
#include "arcroll/robot_model.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace arcroll {

inline constexpr double kInch = 0.0254;
// Two cable classes: between arc ends, and from an end to an inner anchor.
inline constexpr double kEdgeToEdgeFreeLength = 3.25 * kInch;
inline constexpr double kEdgeToMiddleFreeLength = 3.0 * kInch;
inline constexpr double kDefaultCableStiffness = 100.0;  // N/m

// Cable anchors on each arc, in the arc's own frame.
enum class Anchor { A = 0, B = 1, C = 2, D = 3 };

struct Vertex {
  Link link = Link::One;
  Anchor anchor = Anchor::A;

  bool operator==(const Vertex&) const = default;
};

// "A1" .. "D2".
std::string to_string(const Vertex& v);
Vertex parse_vertex(std::string_view token);
// 0..3 for A1..D1, 4..7 for A2..D2.
int vertex_index(const Vertex& v);
Vertex vertex_at(int index);

// AsPrinted: A=(-r,0,0), B=(-r/2,-sqrt3 r/2,0), C=(r/2,sqrt3 r/2,0), D=(r,0,0).
// MirroredB puts B at +y, on the same half-plane as C.
enum class AnchorLayout { AsPrinted, MirroredB };

// Homogeneous anchor columns A, B, C, D.
std::array<Vec4, 4> anchor_matrix(double r, AnchorLayout layout = AnchorLayout::AsPrinted);

struct Cable {
  Vertex end1;  // on link 1
  Vertex end2;  // on link 2
  double stiffness = kDefaultCableStiffness;  // [N/m]
  double free_length = 0.0;                   // [m]
};

/// Bipartite cable multigraph between the anchors of the two arcs.
class CableNet {
 public:
  CableNet(double r, std::vector<Cable> cables, AnchorLayout layout = AnchorLayout::AsPrinted);

  // Twelve cables read off the tendon routing sequence; arc-end-to-arc-end
  // cables get the 3.25" free length, the rest 3".
  static CableNet standard(double r, double stiffness = kDefaultCableStiffness,
                           AnchorLayout layout = AnchorLayout::AsPrinted);

  // Lines "edge <v1> <v2> <k> <d0>", d0 in meters; '#' comments.
  static CableNet parse(const std::string& text, double r,
                        AnchorLayout layout = AnchorLayout::AsPrinted);
  static CableNet load(const std::filesystem::path& path, double r,
                       AnchorLayout layout = AnchorLayout::AsPrinted);
  std::string to_text() const;

  double r() const { return r_; }
  AnchorLayout layout() const { return layout_; }
  const std::vector<Cable>& cables() const { return cables_; }
  size_t size() const { return cables_.size(); }

  // Homogeneous anchor position in its own link frame.
  const Vec4& anchor(const Vertex& v) const;
  int degree(const Vertex& v) const;

  CableNet with_free_lengths(const std::vector<double>& lengths) const;

 private:
  double r_;
  AnchorLayout layout_;
  std::vector<Cable> cables_;
  std::array<Vec4, 4> anchors_;
};

// The tendon routing sequence A1 C2 B1 D2 A1 B2 C1 A2 D1 B2 B1 A2 A1.
const std::vector<Vertex>& standard_routing_sequence();

// d_i = (link-1 anchor) - T (link-2 anchor), 3-vector part.
std::vector<Vec3> cable_vectors(const Transform3& t12, const CableNet& net);
std::vector<Vec3> cable_vectors(const Screw& xi, const CableNet& net);
std::vector<double> cable_lengths(const Transform3& t12, const CableNet& net);

// sum_i k_i (|d_i| - d0_i)^2 / 2  [J]
double energy(const Transform3& t12, const CableNet& net);
double energy(const Screw& xi, const CableNet& net);

// Copy of `net` whose free lengths equal the cable lengths at `t12`.
CableNet rigged_at(const CableNet& net, const Transform3& t12);

// Reflection of link 2 through the plane of link 1, written as a proper
// transform. All anchors are planar, so every cable length is unchanged.
Screw mirror_across_link1_plane(const Screw& xi);

using Gradient6 = Eigen::Matrix<double, 6, 1>;
// Central differences of energy() in (angular, linear) coordinates.
Gradient6 energy_gradient_fd(const Screw& xi, const CableNet& net, double h = 1e-6);

struct FormFindOptions {
  double tol = 1e-6;        // on the finite-difference gradient norm
  int max_iterations = 20000;
  int restarts = 5;         // restart 0 starts at `init`, the rest at random screws
  std::uint64_t seed = 1;
  double fd_step = 1e-6;
};

struct RestartOutcome {
  int index = 0;
  Screw start;
  Screw xi;
  double energy = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct FormFindResult {
  Screw xi;
  Transform3 t12;
  double energy = 0.0;
  double initial_energy = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int best_restart = 0;
  bool converged = false;
  std::vector<RestartOutcome> restarts;
};

/// Minimizes the cable energy over the inter-link screw. Each restart runs a
/// simplex descent followed by damped Gauss-Newton polishing, then the
/// result is put in the canonical mirror orientation (the link-2 normal, or
/// failing that the offset, points to +x/+y/+z first). Restarts run
/// concurrently; the lowest energy wins, ties going to the lowest index.
FormFindResult form_find(const CableNet& net, const Screw& init, const FormFindOptions& opts = {});

}  // namespace arcroll
