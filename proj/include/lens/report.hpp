#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lens/boundary.hpp"
#include "lens/eaton.hpp"
#include "lens/knot.hpp"
#include "lens/pl.hpp"
#include "lens/scattering.hpp"

namespace lens {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"schema_version", "command", ...body}; keys keep insertion order.
Json make_report(const std::string& command, const Json& body);

Json to_json(const BoundaryVector& v);
Json to_json(const ScatteringRecord& r);
Json to_json(const ComparisonReport& r);
Json to_json(const InvisibilityReport& r);
Json to_json(const Crossing& c);
Json to_json(const InvariantTable& t);
Json to_json(const Certificate& c);
Json to_json(const InvariantResult& r);
Json to_json(const PLMembership& m);

/// Pretty-printed with a trailing newline. "-" writes to stdout.
void write_json(const std::string& path, const Json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace lens
