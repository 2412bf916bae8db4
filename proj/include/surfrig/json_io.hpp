#pragma once

#include <json.hpp>

#include <string>

#include "surfrig/reducer.hpp"
#include "surfrig/rigidity.hpp"

namespace surfrig {

using Json = nlohmann::ordered_json;

Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const RigidityReport& rep);

// Custom surface: {"name": ..., "poly": {"i,j,k": "p/q", ...}, "type": int|null}
Surface surface_from_json(const Json& j);

Json poly_to_json(const Polynomial3& poly);

std::string dump_json(const Json& j);  // stable 2-space serialization + newline

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace surfrig
