#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydanneal/config.hpp"
#include "rydanneal/graphs.hpp"
#include "rydanneal/propagate.hpp"

namespace rydanneal::cli {

inline constexpr int kResultSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// Result file:
//   {schema_version, tool, tool_version, config, graph, status {ok, failure},
//    method, omega0_2pi_MHz, trajectories, samples, steps, jumps, norm_drift,
//    mwis {sets, total_weight_2pi_MHz}, summary {argmax, mean_density, phase},
//    distribution: [{bitstring, set, probability, stderr, class}],
//    rydberg_density, wall_time_s?}
// The distribution lists every bitstring in ascending bitmask order.
nlohmann::ordered_json result_to_json(const RunConfig& config, const engine::RunResult& result,
                                      std::optional<double> wall_time_s = std::nullopt);

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& j);

// The parts of a result file that verification and analysis consume.
struct LoadedResult {
  nlohmann::json raw;
  graphs::GraphDefinition graph;
  std::vector<double> distribution;
  std::vector<double> std_error;
  std::vector<std::string> classes;  // as stored
  std::vector<double> rydberg_density;
  double omega0 = 0.0;  // rad/μs
  bool ok = true;
};

// Throws ConfigError on a malformed file.
LoadedResult load_result(const std::filesystem::path& path);
LoadedResult result_from_json(const nlohmann::json& j);

}  // namespace rydanneal::cli
