#include "lens/report.hpp"

#include <fstream>
#include <iostream>

#include "lens/errors.hpp"

namespace lens {

Json make_report(const std::string& command, const Json& body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json to_json(const BoundaryVector& v) {
  return Json{{"arc", v.arc}, {"angle", v.angle}, {"side", v.side == Side::inward ? "inward" : "outward"}};
}

Json to_json(const ScatteringRecord& r) {
  Json j;
  j["entry"] = to_json(r.entry);
  j["trapped"] = r.trapped();
  j["exit"] = r.exit ? to_json(*r.exit) : Json(nullptr);
  j["tau"] = r.tau;
  return j;
}

Json to_json(const ComparisonReport& r) {
  Json j;
  j["equal"] = r.equal;
  j["max_angle_dev"] = r.max_angle_dev;
  j["max_arc_dev"] = r.max_arc_dev;
  j["trapped_count"] = r.trapped_count;
  j["sample_count"] = r.sample_count;
  j["tolerance"] = r.tolerance;
  j["mean_excess"] = r.mean_excess;
  j["excess_dev"] = r.excess_dev;
  return j;
}

Json to_json(const InvisibilityReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["tolerance"] = r.tolerance;
  j["max_direction_deviation"] = r.max_direction_deviation;
  j["max_position_deviation"] = r.max_position_deviation;
  j["trapped_count"] = r.trapped_count;
  j["entries"] = Json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"entry", to_json(e.entry)},
                            {"trapped", e.trapped},
                            {"direction_deviation", e.direction_deviation},
                            {"position_deviation", e.position_deviation}});
  return j;
}

Json to_json(const Crossing& c) {
  return Json{{"l", c.l}, {"l'", c.l_prime}, {"sign", c.sign}, {"type", c.type}, {"point", {c.point.x, c.point.y}}};
}

Json to_json(const InvariantTable& t) {
  Json j = Json::object();
  for (const auto& [g, w] : t) j[std::to_string(g)] = w;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["line_winding"] = c.line_winding;
  if (c.kind == CertificateKind::nonzero_invariant) {
    j["type"] = c.type;
    j["value"] = c.value;
  }
  j["first_return"] = c.first_return ? to_json(*c.first_return) : Json(nullptr);
  return j;
}

Json to_json(const InvariantResult& r) {
  Json j;
  j["curve"] = r.curve;
  j["windings"] = {{"theta", r.theta_winding ? Json(*r.theta_winding) : Json(nullptr)},
                   {"line", r.line_winding},
                   {"contractible", r.contractible}};
  j["crossings"] = Json::array();
  for (const auto& c : r.crossings) j["crossings"].push_back(to_json(c));
  j["W"] = to_json(r.table);
  j["certificate"] = to_json(r.certificate);
  return j;
}

Json to_json(const PLMembership& m) {
  return Json{{"member", m.member},
              {"violation", to_string(m.violation)},
              {"index", m.index},
              {"value", m.value},
              {"message", m.message}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace lens
