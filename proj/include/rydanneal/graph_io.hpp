#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rydanneal/graphs.hpp"

namespace rydanneal::graphs {

// On-disk graph definition:
//   {"name", "lambda_um", "unit_disk_radius_um",
//    "vertices": [{"index", "xyz_um": [x, y, z], "species", "weight_2pi_MHz"}]}
// Weights are stored as ordinary frequencies (MHz) and converted on load.
struct GraphDefinition {
  double lambda_um = 0.0;
  AtomArray array;
};

nlohmann::ordered_json graph_to_json(const GraphDefinition& def);
GraphDefinition graph_from_json(const nlohmann::json& j, const SpacingLimits& limits = {});

GraphDefinition load_graph_file(const std::filesystem::path& path, const SpacingLimits& limits = {});
void save_graph_file(const std::filesystem::path& path, const GraphDefinition& def);

}  // namespace rydanneal::graphs
