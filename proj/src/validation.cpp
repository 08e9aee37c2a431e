#include "arcroll/sim.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

namespace arcroll {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t pos; (pos = line.find(',', start)) != std::string_view::npos; start = pos + 1) {
    out.push_back(line.substr(start, pos - start));
  }
  out.push_back(line.substr(start));
  return out;
}

}  // namespace

ValidationReport validate(const RobotParams& p, const std::string& csv) {
  p.validate();
  ValidationReport rep;
  std::istringstream in(csv);
  std::string raw;
  bool seen_data = false;
  double sum = 0.0;

  for (size_t lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);
    if (!seen_data && !to_number(fields.front())) {
      seen_data = true;
      continue;  // header
    }
    seen_data = true;
    auto skip = [&](std::string reason) { rep.skipped.push_back({lineno, std::move(reason)}); };

    if (fields.size() != 5) {
      skip(fmt::format("expected 5 fields, found {}", fields.size()));
      continue;
    }
    std::array<double, 5> v{};
    bool numeric = true;
    for (size_t i = 0; i < 5; ++i) {
      const auto x = to_number(fields[i]);
      if (!x || !std::isfinite(*x)) {
        numeric = false;
        break;
      }
      v[i] = *x;
    }
    if (!numeric) {
      skip("non-numeric field");
      continue;
    }
    auto in_range = [](double a) { return a >= 0.0 && a <= 180.0; };
    if (!in_range(v[0]) || !in_range(v[1]) || !in_range(v[3]) || !in_range(v[4])) {
      skip("angle outside [0, 180] degrees");
      continue;
    }
    if (v[2] != std::floor(v[2]) || v[2] < 1.0 || v[2] > 4.0) {
      skip("state must be 1, 2, 3 or 4");
      continue;
    }

    ValidationRecord rec;
    rec.line = lineno;
    rec.theta1_deg = v[0];
    rec.theta2_deg = v[1];
    rec.state = state_from_id(static_cast<int>(v[2]));
    rec.phi1_meas_deg = v[3];
    rec.phi2_meas_deg = v[4];
    const ContactSolution sol =
        solve_equilibrium(p, rec.state, MassConfig::from_degrees(rec.theta1_deg, rec.theta2_deg));
    if (sol.degenerate) {
      skip("model is degenerate at this configuration");
      continue;
    }
    rec.phi1_model_deg = rad2deg(sol.phi.phi1);
    rec.phi2_model_deg = rad2deg(sol.phi.phi2);
    rec.abs_error_deg = info(rec.state).rolling == Link::One
                            ? std::abs(rec.phi1_meas_deg - rec.phi1_model_deg)
                            : std::abs(rec.phi2_meas_deg - rec.phi2_model_deg);
    sum += rec.abs_error_deg;
    rep.records.push_back(rec);
  }
  rep.mae_deg = rep.records.empty() ? 0.0 : sum / static_cast<double>(rep.records.size());
  return rep;
}

ValidationReport validate_file(const RobotParams& p, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return validate(p, text.str());
}

std::string synthesize_dataset(const RobotParams& p, int rows, double noise_deg, std::uint64_t seed) {
  if (rows < 0 || !(noise_deg >= 0.0)) throw std::invalid_argument("bad dataset size or noise");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(5.0, 175.0);
  std::uniform_int_distribution<int> state(1, 4);
  std::uniform_real_distribution<double> noise(-noise_deg, noise_deg);

  std::string out = "theta1_deg,theta2_deg,state,phi1_meas_deg,phi2_meas_deg\n";
  for (int i = 0; i < rows; ++i) {
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const HybridState s = state_from_id(state(rng));
    const ContactSolution sol = solve_equilibrium(p, s, MassConfig::from_degrees(t1, t2));
    double phi1 = rad2deg(sol.phi.phi1);
    double phi2 = rad2deg(sol.phi.phi2);
    const double e = noise_deg > 0.0 ? noise(rng) : 0.0;
    double& free = info(s).rolling == Link::One ? phi1 : phi2;
    free = std::clamp(free + e, 0.0, 180.0);
    out += fmt::format("{},{},{},{},{}\n", t1, t2, state_id(s), phi1, phi2);
  }
  return out;
}

}  // namespace arcroll
