#include "arcroll/cli.hpp"

#include "arcroll/output.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace arcroll {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string out;
  std::string format = "csv";
  std::string config;
};

void add_common(CLI::App* cmd, Common& c, bool svg) {
  cmd->add_option("--out", c.out, "Write output to FILE instead of stdout");
  std::vector<std::string> formats{"csv", "json"};
  if (svg) formats.push_back("svg");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("--config", c.config, "Robot parameter file (r_m, link_mass_kg, shift_mass_kg, g)")
      ->check(CLI::ExistingFile);
}

RobotParams load_params(const Common& c) {
  if (c.config.empty()) return RobotParams{};
  return RobotParams::from_config_file(c.config);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs `emit` against --out or `out`.
void emit_to(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
  if (c.out.empty()) {
    emit(out);
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  emit(f);
  if (!f) throw std::runtime_error("write to " + c.out + " failed");
}

Waypoint parse_waypoint_arg(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  const auto w = parse_waypoints(t);
  if (w.size() != 1) throw UsageError("waypoint must be 'theta1,theta2': " + s);
  return w.front();
}

CableNet load_net(const std::string& net_file, const RobotParams& p, double stiffness, bool mirrored_b) {
  const AnchorLayout layout = mirrored_b ? AnchorLayout::MirroredB : AnchorLayout::AsPrinted;
  if (net_file.empty()) return CableNet::standard(p.r, stiffness, layout);
  return CableNet::parse(read_file(net_file), p.r, layout);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statics, hybrid kinematics and form finding for a two-arc tensegrity rolling robot"};
  app.name("arcroll");
  app.require_subcommand(1);

  Common common;

  double theta1 = 0.0;
  double theta2 = 0.0;
  auto* eq = app.add_subcommand("equilibrium", "Equilibrium contact angles and forces in all four states");
  eq->add_option("--theta1", theta1, "Internal mass angle on link 1 [deg]")->required();
  eq->add_option("--theta2", theta2, "Internal mass angle on link 2 [deg]")->required();
  add_common(eq, common, false);

  double step = 5.0;
  auto* sw = app.add_subcommand("sweep", "Equilibria over the full (theta1, theta2) grid");
  sw->add_option("--step", step, "Grid step [deg], must divide 180")->capture_default_str();
  add_common(sw, common, true);

  auto* bd = app.add_subcommand("boundaries", "Transition boundary polylines from a grid sweep");
  bd->add_option("--step", step, "Grid step [deg], must divide 180")->capture_default_str();
  add_common(bd, common, false);

  std::string waypoint_file;
  std::vector<std::string> waypoint_args;
  int start_state = 1;
  double path_step = 1.0;
  auto* pa = app.add_subcommand("path", "Quasi-static path with hybrid transitions");
  pa->add_option("--waypoints", waypoint_file, "File of 'theta1_deg theta2_deg' lines")->check(CLI::ExistingFile);
  pa->add_option("-w,--waypoint", waypoint_args, "Waypoint 'theta1,theta2' [deg], repeatable");
  pa->add_option("--start-state", start_state, "Initial hybrid state")->check(CLI::Range(1, 4))->capture_default_str();
  pa->add_option("--step", path_step, "Maximum sample spacing [deg]")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(pa, common, true);

  std::string data_file;
  int synth_rows = 0;
  double noise = 5.0;
  std::uint64_t seed = 1;
  std::string emit_data;
  auto* va = app.add_subcommand("validate", "Mean absolute error of the model against measured angles");
  auto* data_opt = va->add_option("--data", data_file, "CSV theta1_deg,theta2_deg,state,phi1_meas_deg,phi2_meas_deg")
                       ->check(CLI::ExistingFile);
  auto* synth_opt = va->add_option("--synthesize", synth_rows, "Validate a synthetic dataset of N rows")
                        ->check(CLI::NonNegativeNumber);
  data_opt->excludes(synth_opt);
  va->add_option("--noise", noise, "Synthetic noise half-width [deg]")->capture_default_str();
  va->add_option("--seed", seed, "Synthetic dataset seed")->capture_default_str();
  va->add_option("--emit-data", emit_data, "Also write the synthetic dataset to FILE");
  add_common(va, common, false);

  std::string net_file;
  bool default_net = false;
  double stiffness = kDefaultCableStiffness;
  bool mirrored_b = false;
  bool rigged = false;
  FormFindOptions ff;
  auto* fo = app.add_subcommand("formfind", "Minimum-energy transform between the two arcs");
  auto* fo_net = fo->add_option("--net", net_file, "Net file of 'edge v1 v2 k d0' lines")->check(CLI::ExistingFile);
  fo->add_flag("--default-net", default_net, "Use the twelve-cable net (default)")->excludes(fo_net);
  fo->add_option("--stiffness", stiffness, "Cable stiffness for the default net [N/m]")->capture_default_str();
  fo->add_flag("--mirrored-b", mirrored_b, "Place anchor B at +y");
  fo->add_flag("--rigged", rigged, "Set free lengths to the cable lengths at the default link transform");
  fo->add_option("--restarts", ff.restarts, "Number of starts")->check(CLI::PositiveNumber)->capture_default_str();
  fo->add_option("--seed", ff.seed, "Seed for random starts")->capture_default_str();
  fo->add_option("--tol", ff.tol, "Gradient norm tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(fo, common, false);

  std::string check_path;
  auto* ro = app.add_subcommand("route", "Euler circuit through the cable net");
  auto* ro_net = ro->add_option("--net", net_file, "Net file of 'edge v1 v2 k d0' lines")->check(CLI::ExistingFile);
  ro->add_flag("--default-net", default_net, "Use the twelve-cable net (default)")->excludes(ro_net);
  ro->add_flag("--mirrored-b", mirrored_b, "Place anchor B at +y");
  ro->add_option("--check", check_path, "Validate this routing ('A1 C2 B1 ...') instead of generating one");
  add_common(ro, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 1;
  }

  try {
    const RobotParams params = load_params(common);

    if (*eq) {
      const MassConfig cfg = MassConfig::from_degrees(theta1, theta2);
      cfg.validate();
      const auto sols = solve_all_states(params, cfg);
      emit_to(common, out, [&](std::ostream& os) {
        if (common.format == "json") {
          write_equilibrium_json(os, theta1, theta2, sols);
        } else {
          write_equilibrium_csv(os, theta1, theta2, sols);
        }
      });
      if (std::any_of(sols.begin(), sols.end(), [](const ContactSolution& s) { return s.degenerate; })) {
        err << "degenerate configuration: the contact angle is indifferent at this (theta1, theta2)\n";
        return 2;
      }
      return 0;
    }

    if (*sw || *bd) {
      const SweepResult s = sweep(params, step);
      const auto lines = boundaries(s);
      emit_to(common, out, [&](std::ostream& os) {
        if (*bd) {
          common.format == "json" ? write_boundaries_json(os, lines) : write_boundaries_csv(os, lines);
        } else if (common.format == "json") {
          write_sweep_json(os, s, lines);
        } else if (common.format == "svg") {
          write_sweep_svg(os, s, lines);
        } else {
          write_sweep_csv(os, s);
        }
      });
      return 0;
    }

    if (*pa) {
      std::vector<Waypoint> wps;
      if (!waypoint_file.empty()) wps = parse_waypoints(read_file(waypoint_file));
      for (const auto& w : waypoint_args) wps.push_back(parse_waypoint_arg(w));
      if (wps.empty()) throw UsageError("path needs --waypoints FILE or at least one --waypoint");
      const PathTrace t = run_path(params, wps, state_from_id(start_state), path_step);
      emit_to(common, out, [&](std::ostream& os) {
        if (common.format == "json") {
          write_path_json(os, t);
        } else if (common.format == "svg") {
          write_path_svg(os, t);
        } else {
          write_path_csv(os, t);
        }
      });
      for (const PathEvent& e : t.events) {
        fmt::print(err, "transition {} -> {} at theta = ({:.6f}, {:.6f}) deg\n", state_id(e.transition.from),
                   state_id(e.transition.to), e.theta1_deg, e.theta2_deg);
      }
      if (t.truncated) {
        err << "path truncated: " << t.diagnostic << '\n';
        return 2;
      }
      return 0;
    }

    if (*va) {
      ValidationReport rep;
      if (*synth_opt) {
        const std::string data = synthesize_dataset(params, synth_rows, noise, seed);
        if (!emit_data.empty()) {
          std::ofstream f(emit_data);
          if (!f) throw std::runtime_error("cannot write " + emit_data);
          f << data;
        }
        rep = validate(params, data);
      } else if (!data_file.empty()) {
        rep = validate_file(params, data_file);
      } else {
        throw UsageError("validate needs --data FILE or --synthesize N");
      }
      emit_to(common, out, [&](std::ostream& os) {
        common.format == "json" ? write_validation_json(os, rep) : write_validation_csv(os, rep);
      });
      for (const RowIssue& i : rep.skipped) fmt::print(err, "line {}: {}\n", i.line, i.reason);
      fmt::print(err, "MAE {:.4f} deg over {} rows ({} skipped)\n", rep.mae_deg, rep.records.size(),
                 rep.skipped.size());
      if (rep.records.empty()) {
        err << "no valid rows\n";
        return 2;
      }
      return 0;
    }

    if (*fo) {
      CableNet net = load_net(net_file, params, stiffness, mirrored_b);
      if (rigged) net = rigged_at(net, default_link_transform());
      const FormFindResult r = form_find(net, Screw{}, ff);
      emit_to(common, out, [&](std::ostream& os) {
        common.format == "json" ? write_formfind_json(os, r, net) : write_formfind_csv(os, r, net);
      });
      if (!r.converged) {
        fmt::print(err, "form finding did not converge: gradient norm {:.3e} > {:.1e}\n", r.gradient_norm,
                   ff.tol);
        return 2;
      }
      return 0;
    }

    if (*ro) {
      const CableNet net = load_net(net_file, params, kDefaultCableStiffness, mirrored_b);
      const RoutingPath path = check_path.empty() ? euler_circuit(net) : parse_routing(check_path);
      const RoutingReport rep = validate_routing(path, net);
      emit_to(common, out, [&](std::ostream& os) {
        common.format == "json" ? write_route_json(os, path, rep) : write_route_csv(os, path);
      });
      for (const std::string& v : rep.violations) err << "violation: " << v << '\n';
      return rep.ok ? 0 : 2;
    }
  } catch (const UnsupportedShape& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace arcroll
