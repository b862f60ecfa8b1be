#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rydanneal/disorder.hpp"
#include "rydanneal/drive.hpp"
#include "rydanneal/graph_io.hpp"
#include "rydanneal/interaction.hpp"
#include "rydanneal/propagate.hpp"

namespace rydanneal::cli {

// A fully resolved run configuration. Frequencies are already angular.
//
// Config file layout (all frequencies in MHz, i.e. the "/2π" values):
//   graph:       {file | library + (lambda_um | rb_over_lambda) | chain + (spacing_um | rb_over_a),
//                 radius_um?, weights_2pi_MHz?, delta_f_2pi_MHz? | delta_f_over_omega0?,
//                 wire_weight_2pi_MHz? | wire_weight_over_omega0?}
//   schedule:    {omega0_2pi_MHz | one_photon {omega420_2pi_MHz, omega1013_2pi_MHz, delta_m_2pi_MHz},
//                 delta0_2pi_MHz, alpha_d?, tau_us, tf1_us?, tf2_us?}
//   interaction: {graph_graph?, graph_wire?, wire_wire? {c6_2pi_GHz_um6, c3_2pi_GHz_um3, r_vdw_um, r_lr_um},
//                 graph_lifetime_us?, wire_lifetime_us?}
//   dissipation: {gamma_mode: off|bare|scaled, trajectories, population_factor?}
//   disorder:    {sigma_x_um?, sigma_y_um?, sigma_z_um? | radial_um + radial_interpretation (per_axis|quadrature),
//                 axial_um?, samples, distribution?: gaussian|uniform}
//   numerics:    {max_phase_per_step?, max_atoms?, norm_tolerance?}
//   analysis:    {phase_threshold?, tracked_states?: ["{1, 3}", ...]}
//   seed:        u64
struct RunConfig {
  nlohmann::json source;  // as read, with relative paths resolved and the seed filled in
  graphs::GraphDefinition graph;
  drive::ScheduleParams schedule;
  engine::InteractionTable table;
  engine::GammaMode gamma_mode = engine::GammaMode::off;
  double population_factor = 0.0;
  int trajectories = 0;
  std::optional<engine::DisorderModel> disorder;
  std::uint64_t seed = 0;
  engine::RunOptions options;
  double phase_threshold = 0.4;
  std::vector<VertexSet> tracked_states;

  double omega0() const { return schedule.omega0; }
  bool open_system() const { return gamma_mode != engine::GammaMode::off && trajectories > 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Throws ConfigError with the dotted path of the offending field.
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

// Sets an existing dotted field ("graph.delta_f_over_omega0") of a config.
// Throws ConfigError when the path does not resolve.
void set_config_value(nlohmann::json& config, const std::string& dotted_path, const nlohmann::json& value);

// Executes the configured run (TDSE or trajectories, averaged over disorder
// samples when a disorder block is present).
engine::RunResult execute_run(const RunConfig& config, int threads = 1);

}  // namespace rydanneal::cli
