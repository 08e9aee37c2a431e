#pragma once

#include "arcroll/formfinding.hpp"
#include "arcroll/routing.hpp"
#include "arcroll/sim.hpp"

#include <array>
#include <ostream>
#include <string_view>

namespace arcroll {

enum class Format { Csv, Json, Svg };
Format parse_format(std::string_view s);

// CSV angles in degrees with 6 decimals. The sweep CSV header is
// theta1_deg,theta2_deg,state,phi1_deg,phi2_deg,n1_N,n2_N,degenerate.
void write_sweep_csv(std::ostream& os, const SweepResult& s);
void write_sweep_json(std::ostream& os, const SweepResult& s, const std::vector<BoundaryLine>& lines);
// One heatmap panel of the free contact angle per state, one rect per record,
// boundary polylines on top.
void write_sweep_svg(std::ostream& os, const SweepResult& s, const std::vector<BoundaryLine>& lines);

void write_boundaries_csv(std::ostream& os, const std::vector<BoundaryLine>& lines);
void write_boundaries_json(std::ostream& os, const std::vector<BoundaryLine>& lines);

void write_equilibrium_csv(std::ostream& os, double theta1_deg, double theta2_deg,
                           const std::array<ContactSolution, 4>& sols);
void write_equilibrium_json(std::ostream& os, double theta1_deg, double theta2_deg,
                            const std::array<ContactSolution, 4>& sols);

void write_path_csv(std::ostream& os, const PathTrace& t);
void write_path_json(std::ostream& os, const PathTrace& t);
// One circle per sample, one cross per transition event.
void write_path_svg(std::ostream& os, const PathTrace& t);

void write_validation_csv(std::ostream& os, const ValidationReport& r);
void write_validation_json(std::ostream& os, const ValidationReport& r);

void write_formfind_csv(std::ostream& os, const FormFindResult& r, const CableNet& net);
void write_formfind_json(std::ostream& os, const FormFindResult& r, const CableNet& net);

void write_route_csv(std::ostream& os, const RoutingPath& path);
void write_route_json(std::ostream& os, const RoutingPath& path, const RoutingReport& report);

}  // namespace arcroll
