#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lens/metric.hpp"

namespace lens {

/// {"kind": "vacuum" | "eaton" | "radial-profile", "radius": R, "profile": [[r, n], ...]}.
/// Profile radii are in physical units. Eaton files may add "exclusion" (fraction of R).
ConformalMetric metric_from_json(const nlohmann::json& spec);

/// "vacuum", "eaton", or a path to a JSON metric file.
ConformalMetric load_metric(const std::string& spec);

}  // namespace lens
