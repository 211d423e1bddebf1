#pragma once

#include <string_view>

#include <json.hpp>

#include "kcover/coverage.hpp"
#include "kcover/density.hpp"
#include "kcover/lattice.hpp"
#include "kcover/optimizer.hpp"
#include "kcover/voronoi.hpp"

namespace kcover {

using Json = nlohmann::json;

// {"u":[ux,uy],"v":[vx,vy],"offsets":[[x,y],...],"radius":r}
Json to_json(const PeriodicConfig& c);
// Throws ParseError on missing or mistyped fields and GeometryError when the
// values violate PeriodicConfig invariants.
PeriodicConfig config_from_json(const Json& j);
PeriodicConfig parse_config(std::string_view text);

// {"k":..., "status":..., "witness":[x,y] or null, "radius_low":..., "radius_high":...}
Json to_json(const CoverageCertificate& c);
CoverageCertificate certificate_from_json(const Json& j);

Json to_json(const DensityReport& r);
Json to_json(const VoronoiCell& cell);
Json to_json(const CongruenceSignature& s);
Json to_json(const OptimizationResult& r);

// eval_index,params...,density with a header row.
std::string history_csv(const OptimizationResult& r);

}  // namespace kcover
