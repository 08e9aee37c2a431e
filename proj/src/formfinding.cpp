#include "arcroll/formfinding.hpp"

#include "arcroll/nelder_mead.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace arcroll {

namespace {

constexpr char kAnchorNames[] = {'A', 'B', 'C', 'D'};

bool is_arc_end_anchor(Anchor a) { return a == Anchor::A || a == Anchor::D; }

// Optimizer coordinates: angular part as is, linear part in units of r so
// both halves of the screw are O(1).
Eigen::VectorXd to_scaled(const Screw& xi, double r) {
  Eigen::VectorXd y(6);
  y << xi.angular, xi.linear / r;
  return y;
}

Screw from_scaled(const Eigen::VectorXd& y, double r) {
  return {y.head<3>(), y.tail<3>() * r};
}

Eigen::VectorXd weighted_residuals(const Eigen::VectorXd& y, const CableNet& net) {
  const std::vector<double> len = cable_lengths(exp_screw(from_scaled(y, net.r())), net);
  Eigen::VectorXd res(static_cast<Eigen::Index>(len.size()));
  for (size_t i = 0; i < len.size(); ++i) {
    const Cable& c = net.cables()[i];
    res(static_cast<Eigen::Index>(i)) = std::sqrt(c.stiffness) * (len[i] - c.free_length);
  }
  return res;
}

struct PolishResult {
  Eigen::VectorXd y;
  int iterations = 0;
};

// Levenberg-Marquardt on the weighted residuals with a central-difference Jacobian.
PolishResult polish(Eigen::VectorXd y, const CableNet& net, int max_iterations) {
  constexpr double kJacStep = 1e-7;
  const Eigen::Index m = static_cast<Eigen::Index>(net.size());

  PolishResult out;
  Eigen::VectorXd res = weighted_residuals(y, net);
  double e = 0.5 * res.squaredNorm();
  double lambda = 1e-3;
  for (; out.iterations < max_iterations; ++out.iterations) {
    Eigen::MatrixXd jac(m, 6);
    for (Eigen::Index j = 0; j < 6; ++j) {
      Eigen::VectorXd yp = y, ym = y;
      yp(j) += kJacStep;
      ym(j) -= kJacStep;
      jac.col(j) = (weighted_residuals(yp, net) - weighted_residuals(ym, net)) / (2.0 * kJacStep);
    }
    const Eigen::VectorXd grad = jac.transpose() * res;
    const Eigen::MatrixXd normal = jac.transpose() * jac;

    bool accepted = false;
    Eigen::VectorXd step;
    while (lambda < 1e12) {
      Eigen::MatrixXd damped = normal;
      damped.diagonal() += lambda * (normal.diagonal().array() + 1e-12).matrix();
      step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd trial = y + step;
      const Eigen::VectorXd trial_res = weighted_residuals(trial, net);
      const double trial_e = 0.5 * trial_res.squaredNorm();
      if (trial_e < e) {
        y = trial;
        res = trial_res;
        e = trial_e;
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted || step.norm() <= 1e-15 * (1.0 + y.norm())) break;
  }
  out.y = y;
  return out;
}

// Sign convention picking one of the two mirror images.
bool is_canonical(const Screw& xi) {
  const Transform3 t = exp_screw(xi);
  const double keys[] = {t.rotation.matrix()(0, 2), t.rotation.matrix()(1, 2), t.translation.z()};
  for (double k : keys) {
    if (std::abs(k) > 1e-9) return k > 0.0;
  }
  return true;
}

Screw random_screw(std::uint64_t seed, int index, double r) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  Vec3 axis(normal(rng), normal(rng), normal(rng));
  axis.normalize();
  const double a = angle(rng);
  const Vec3 lin(normal(rng) * r, normal(rng) * r, normal(rng) * r);
  return {axis * a, lin};
}

RestartOutcome run_restart(const CableNet& net, int index, const Screw& start,
                           const FormFindOptions& opts) {
  RestartOutcome out;
  out.index = index;
  out.start = start;

  const double g0 = energy_gradient_fd(start, net, opts.fd_step).norm();
  if (g0 < opts.tol) {
    out.xi = start;
    out.energy = energy(start, net);
    out.gradient_norm = g0;
    out.converged = true;
    return out;
  }

  const double r = net.r();
  optim::NelderMeadOptions nm;
  nm.initial_step = 0.25;
  nm.f_tol = 1e-14;
  nm.x_tol = 1e-8;
  nm.max_iterations = opts.max_iterations;
  const auto coarse = optim::nelder_mead(
      [&](const Eigen::VectorXd& y) { return energy(from_scaled(y, r), net); },
      to_scaled(start, r), nm);
  const PolishResult fine = polish(coarse.x, net, 500);

  out.xi = from_scaled(fine.y, r);
  if (!is_canonical(out.xi)) out.xi = mirror_across_link1_plane(out.xi);
  out.energy = energy(out.xi, net);
  out.gradient_norm = energy_gradient_fd(out.xi, net, opts.fd_step).norm();
  out.iterations = coarse.iterations + fine.iterations;
  out.converged = out.gradient_norm < opts.tol;
  return out;
}

}  // namespace

std::string to_string(const Vertex& v) {
  return std::string(1, kAnchorNames[static_cast<int>(v.anchor)]) + std::to_string(index_of(v.link));
}

Vertex parse_vertex(std::string_view token) {
  if (token.size() == 2) {
    for (int a = 0; a < 4; ++a) {
      if (token[0] == kAnchorNames[a] && (token[1] == '1' || token[1] == '2')) {
        return {link_from_index(token[1] - '0'), static_cast<Anchor>(a)};
      }
    }
  }
  throw std::invalid_argument("bad vertex name '" + std::string(token) + "', expected A1..D2");
}

int vertex_index(const Vertex& v) {
  return (v.link == Link::One ? 0 : 4) + static_cast<int>(v.anchor);
}

Vertex vertex_at(int index) {
  if (index < 0 || index > 7) throw std::invalid_argument("vertex index must be 0..7");
  return {index < 4 ? Link::One : Link::Two, static_cast<Anchor>(index % 4)};
}

std::array<Vec4, 4> anchor_matrix(double r, AnchorLayout layout) {
  if (!(r > 0.0)) throw std::invalid_argument("arc radius must be > 0");
  const double h = std::sqrt(3.0) * r / 2.0;
  const double b_y = layout == AnchorLayout::AsPrinted ? -h : h;
  return {Vec4(-r, 0.0, 0.0, 1.0), Vec4(-r / 2.0, b_y, 0.0, 1.0), Vec4(r / 2.0, h, 0.0, 1.0),
          Vec4(r, 0.0, 0.0, 1.0)};
}

CableNet::CableNet(double r, std::vector<Cable> cables, AnchorLayout layout)
    : r_(r), layout_(layout), cables_(std::move(cables)), anchors_(anchor_matrix(r, layout)) {
  if (cables_.empty()) throw std::invalid_argument("cable net has no cables");
  for (const Cable& c : cables_) {
    if (c.end1.link != Link::One || c.end2.link != Link::Two) {
      throw std::invalid_argument("cable " + to_string(c.end1) + "-" + to_string(c.end2) +
                                  " must join link 1 to link 2");
    }
    if (!(c.stiffness > 0.0) || !std::isfinite(c.stiffness)) {
      throw std::invalid_argument("cable stiffness must be > 0");
    }
    if (!(c.free_length >= 0.0) || !std::isfinite(c.free_length)) {
      throw std::invalid_argument("cable free length must be >= 0");
    }
  }
}

const std::vector<Vertex>& standard_routing_sequence() {
  static const std::vector<Vertex> seq = [] {
    std::vector<Vertex> v;
    for (const char* s : {"A1", "C2", "B1", "D2", "A1", "B2", "C1", "A2", "D1", "B2", "B1", "A2",
                          "A1"}) {
      v.push_back(parse_vertex(s));
    }
    return v;
  }();
  return seq;
}

CableNet CableNet::standard(double r, double stiffness, AnchorLayout layout) {
  const auto& seq = standard_routing_sequence();
  std::vector<Cable> cables;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    Vertex a = seq[i], b = seq[i + 1];
    if (a.link == Link::Two) std::swap(a, b);
    const bool end_to_end = is_arc_end_anchor(a.anchor) && is_arc_end_anchor(b.anchor);
    cables.push_back(
        {a, b, stiffness, end_to_end ? kEdgeToEdgeFreeLength : kEdgeToMiddleFreeLength});
  }
  return CableNet(r, std::move(cables), layout);
}

CableNet CableNet::parse(const std::string& text, double r, AnchorLayout layout) {
  std::vector<Cable> cables;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kw;
    if (!(fields >> kw)) continue;
    std::string v1, v2, extra;
    Cable c;
    if (kw != "edge" || !(fields >> v1 >> v2 >> c.stiffness >> c.free_length) || (fields >> extra)) {
      throw std::invalid_argument("net line " + std::to_string(line_no) +
                                  ": expected 'edge <v1> <v2> <k> <d0>'");
    }
    c.end1 = parse_vertex(v1);
    c.end2 = parse_vertex(v2);
    if (c.end1.link == Link::Two) std::swap(c.end1, c.end2);
    cables.push_back(c);
  }
  return CableNet(r, std::move(cables), layout);
}

CableNet CableNet::load(const std::filesystem::path& path, double r, AnchorLayout layout) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open net file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), r, layout);
}

std::string CableNet::to_text() const {
  std::ostringstream out;
  out.precision(17);
  for (const Cable& c : cables_) {
    out << "edge " << to_string(c.end1) << ' ' << to_string(c.end2) << ' ' << c.stiffness << ' '
        << c.free_length << '\n';
  }
  return out.str();
}

const Vec4& CableNet::anchor(const Vertex& v) const {
  return anchors_[static_cast<size_t>(v.anchor)];
}

int CableNet::degree(const Vertex& v) const {
  int d = 0;
  for (const Cable& c : cables_) d += (c.end1 == v) + (c.end2 == v);
  return d;
}

CableNet CableNet::with_free_lengths(const std::vector<double>& lengths) const {
  if (lengths.size() != cables_.size()) {
    throw std::invalid_argument("need one free length per cable");
  }
  std::vector<Cable> cables = cables_;
  for (size_t i = 0; i < cables.size(); ++i) cables[i].free_length = lengths[i];
  return CableNet(r_, std::move(cables), layout_);
}

std::vector<Vec3> cable_vectors(const Transform3& t12, const CableNet& net) {
  std::vector<Vec3> out;
  out.reserve(net.size());
  for (const Cable& c : net.cables()) {
    out.push_back((net.anchor(c.end1) - t12.apply(net.anchor(c.end2))).head<3>());
  }
  return out;
}

std::vector<Vec3> cable_vectors(const Screw& xi, const CableNet& net) {
  return cable_vectors(exp_screw(xi), net);
}

std::vector<double> cable_lengths(const Transform3& t12, const CableNet& net) {
  std::vector<double> out;
  out.reserve(net.size());
  for (const Vec3& d : cable_vectors(t12, net)) out.push_back(d.norm());
  return out;
}

double energy(const Transform3& t12, const CableNet& net) {
  const std::vector<double> len = cable_lengths(t12, net);
  double e = 0.0;
  for (size_t i = 0; i < len.size(); ++i) {
    const Cable& c = net.cables()[i];
    const double stretch = len[i] - c.free_length;
    e += 0.5 * c.stiffness * stretch * stretch;
  }
  return e;
}

double energy(const Screw& xi, const CableNet& net) { return energy(exp_screw(xi), net); }

CableNet rigged_at(const CableNet& net, const Transform3& t12) {
  return net.with_free_lengths(cable_lengths(t12, net));
}

Screw mirror_across_link1_plane(const Screw& xi) {
  // Conjugation by S = diag(1, 1, -1): S exp(xi^) S = exp((-S w)^, S v).
  return {Vec3(-xi.angular.x(), -xi.angular.y(), xi.angular.z()),
          Vec3(xi.linear.x(), xi.linear.y(), -xi.linear.z())};
}

Gradient6 energy_gradient_fd(const Screw& xi, const CableNet& net, double h) {
  Gradient6 g;
  for (int j = 0; j < 6; ++j) {
    Screw plus = xi, minus = xi;
    Vec3& pc = j < 3 ? plus.angular : plus.linear;
    Vec3& mc = j < 3 ? minus.angular : minus.linear;
    pc(j % 3) += h;
    mc(j % 3) -= h;
    g(j) = (energy(plus, net) - energy(minus, net)) / (2.0 * h);
  }
  return g;
}

FormFindResult form_find(const CableNet& net, const Screw& init, const FormFindOptions& opts) {
  if (opts.restarts < 1) throw std::invalid_argument("form_find needs at least one restart");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("form_find tolerance must be > 0");

  std::vector<std::future<RestartOutcome>> jobs;
  for (int i = 0; i < opts.restarts; ++i) {
    const Screw start = i == 0 ? init : random_screw(opts.seed, i, net.r());
    jobs.push_back(std::async(std::launch::async, run_restart, std::cref(net), i, start,
                              std::cref(opts)));
  }

  FormFindResult res;
  res.initial_energy = energy(init, net);
  for (auto& j : jobs) res.restarts.push_back(j.get());

  const RestartOutcome* best = &res.restarts.front();
  for (const RestartOutcome& o : res.restarts) {
    if (o.energy < best->energy - 1e-12 * std::max(1.0, best->energy)) best = &o;
  }
  res.xi = best->xi;
  res.t12 = exp_screw(best->xi);
  res.energy = best->energy;
  res.gradient_norm = best->gradient_norm;
  res.iterations = best->iterations;
  res.best_restart = best->index;
  res.converged = best->converged;
  return res;
}

}  // namespace arcroll
