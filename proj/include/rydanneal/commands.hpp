#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace rydanneal::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kEngineFailure = 3, kVerifyFailure = 4 };

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::filesystem::path out;
};

int command_run(const std::filesystem::path& config, const CommonOptions& opts, bool wall_time, std::ostream& log);
int command_sweep(const std::filesystem::path& spec, const CommonOptions& opts, std::ostream& log);
int command_reaggregate(const std::filesystem::path& dir, std::ostream& log);
int command_oracle(const std::filesystem::path& graph, std::ostream& out, bool json);
int command_verify(const std::filesystem::path& result, std::ostream& out);
// Writes one library graph, or all of them when `name` is empty, as graph
// definition files.
int command_graph_export(const std::string& name, double lambda_um, const std::filesystem::path& out,
                         std::ostream& log);
int command_analyze_ranked(const std::filesystem::path& result, std::ostream& out);
int command_analyze_susceptibility(const std::filesystem::path& sweep_dir, std::ostream& out);
int command_analyze_phase_grid(const std::filesystem::path& sweep_dir, std::ostream& out);
int command_analyze_walls(const std::filesystem::path& result, std::ostream& out);

}  // namespace rydanneal::cli
