#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydanneal/vertex_set.hpp"

namespace rydanneal::cli {

struct SweepAxis {
  std::string path;  // dotted config field
  std::vector<double> values;
};

// Sweep file:
//   {base: {run config} | base_config: "file",
//    axes: [{path, values: [...]} | {path, start, stop, step}] (one or two),
//    tracked_states?: ["{1, 3}", ...],
//    budget?: {max_points, max_atoms}}
struct SweepSpec {
  nlohmann::json base;
  std::filesystem::path base_dir;
  std::vector<SweepAxis> axes;
  std::vector<VertexSet> tracked_states;
  long max_points = 10000;
  int max_atoms = 12;
  nlohmann::json source;
};

SweepSpec parse_sweep_spec(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
SweepSpec load_sweep_spec(const std::filesystem::path& path);

struct SweepPoint {
  std::vector<int> index;
  std::vector<double> values;
  std::string file;  // relative to the output directory
  bool ok = false;
  std::string failure;
};

struct SweepOutcome {
  std::vector<SweepPoint> points;
  int failures = 0;
};

// Runs every grid point on `threads` workers and writes
//   <out>/points/<id>.json, <out>/aggregate.csv, <out>/manifest.json.
// Point k of the grid uses derive_seed(seed, "point/i[/j]"). Point failures
// are recorded and do not stop the sweep.
SweepOutcome run_sweep(const SweepSpec& spec, std::uint64_t seed, int threads, const std::filesystem::path& out);

// Rebuilds aggregate.csv from the manifest and point files alone.
void reaggregate(const std::filesystem::path& out);

}  // namespace rydanneal::cli
