#include "kcover/json_io.hpp"

#include <sstream>

#include "kcover/error.hpp"

namespace kcover {

namespace {

Json pair(Point p) { return Json::array({p.x, p.y}); }

Point point_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json to_json(const PeriodicConfig& c) {
  Json offsets = Json::array();
  for (const Point& p : c.offsets()) offsets.push_back(pair(p));
  return Json{{"u", pair(c.basis().u())},
              {"v", pair(c.basis().v())},
              {"offsets", std::move(offsets)},
              {"radius", c.radius()}};
}

PeriodicConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  const Point u = point_from(field(j, "u"), "u");
  const Point v = point_from(field(j, "v"), "v");
  const Json& off = field(j, "offsets");
  if (!off.is_array() || off.empty()) throw ParseError("offsets: expected a non-empty array");
  std::vector<Point> offsets;
  for (const Json& p : off) offsets.push_back(point_from(p, "offsets[]"));
  const Json& r = field(j, "radius");
  if (!r.is_number()) throw ParseError("radius: expected a number");
  return PeriodicConfig(Basis(u, v), std::move(offsets), r.get<double>());
}

PeriodicConfig parse_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

Json to_json(const CoverageCertificate& c) {
  return Json{{"k", c.k},
              {"status", std::string(to_string(c.status))},
              {"witness", c.witness ? pair(*c.witness) : Json(nullptr)},
              {"radius_low", c.radius_low},
              {"radius_high", c.radius_high}};
}

CoverageCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("certificate: expected a JSON object");
  CoverageCertificate c;
  try {
    c.k = field(j, "k").get<int>();
    const auto status = coverage_status_from_string(field(j, "status").get<std::string>());
    if (!status) throw ParseError("certificate: unknown status");
    c.status = *status;
    const Json& w = field(j, "witness");
    if (!w.is_null()) c.witness = point_from(w, "witness");
    c.radius_low = field(j, "radius_low").get<double>();
    c.radius_high = field(j, "radius_high").get<double>();
  } catch (const Json::type_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return c;
}

Json to_json(const DensityReport& r) {
  return Json{{"density", r.density},
              {"normalized", r.normalized},
              {"toth_bound", r.toth_bound},
              {"meets_toth", r.meets_toth},
              {"k", r.k}};
}

Json to_json(const VoronoiCell& cell) {
  Json verts = Json::array();
  for (const Point& p : cell.polygon.vertices()) verts.push_back(pair(p));
  return Json{{"site", pair(cell.site)}, {"vertices", std::move(verts)}, {"area", polygon_area(cell.polygon)}};
}

Json to_json(const CongruenceSignature& s) {
  Json seq = Json::array();
  for (const auto& [len, ang] : s.values()) seq.push_back(Json::array({len, ang}));
  return seq;
}

Json to_json(const OptimizationResult& r) {
  Json history = Json::array();
  for (const HistoryEntry& h : r.history)
    history.push_back(Json{{"evaluation", h.evaluation}, {"params", h.params}, {"density", h.density}});
  return Json{{"best_config", to_json(r.best_config)},
              {"params", r.params},
              {"density", r.density},
              {"normalized", r.density / kTheta},
              {"certificate", to_json(r.certificate)},
              {"evaluations", r.evaluations},
              {"converged", r.converged},
              {"history", std::move(history)}};
}

std::string history_csv(const OptimizationResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "eval_index";
  const std::size_t n = r.params.size();
  for (std::size_t i = 0; i < n; ++i) os << ",p" << i;
  os << ",density\n";
  for (const HistoryEntry& h : r.history) {
    os << h.evaluation;
    for (double p : h.params) os << ',' << p;
    os << ',' << h.density << '\n';
  }
  return os.str();
}

}  // namespace kcover
