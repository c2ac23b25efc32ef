#include "lens/metric_io.hpp"

#include <filesystem>
#include <fstream>

#include "lens/eaton.hpp"
#include "lens/errors.hpp"

namespace lens {

ConformalMetric metric_from_json(const nlohmann::json& spec) {
  if (!spec.is_object()) throw DomainError("metric spec must be a JSON object");
  const std::string kind = spec.value("kind", std::string{});
  double radius = 1.0;
  if (spec.contains("radius")) {
    if (!spec["radius"].is_number()) throw DomainError("metric radius must be a number");
    radius = spec["radius"].get<double>();
  }
  if (!(radius > 0.0)) throw DomainError("metric radius must be positive");
  if (kind == "vacuum") return ConformalMetric::vacuum(radius);
  if (kind == "eaton") {
    const double exclusion = spec.value("exclusion", 1e-3);
    return make_eaton_metric(radius, exclusion);
  }
  if (kind == "radial-profile") {
    if (!spec.contains("profile") || !spec["profile"].is_array()) throw DomainError("radial-profile needs a profile array");
    std::vector<std::array<double, 2>> knots;
    for (const auto& row : spec["profile"]) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
        throw DomainError("profile rows must be [r, n] number pairs");
      knots.push_back({row[0].get<double>() / radius, row[1].get<double>()});
    }
    return ConformalMetric::radial_profile(knots, radius);
  }
  throw DomainError("unknown metric kind '" + kind + "'");
}

ConformalMetric load_metric(const std::string& spec) {
  if (spec == "vacuum") return ConformalMetric::vacuum();
  if (spec == "eaton") return make_eaton_metric();
  if (!std::filesystem::exists(spec)) throw DomainError("metric '" + spec + "' is neither built in nor a file");
  std::ifstream in(spec);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("cannot parse metric file '" + spec + "': " + e.what());
  }
  return metric_from_json(j);
}

}  // namespace lens
