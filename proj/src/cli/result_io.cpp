#include <algorithm>
#include <fstream>

#include "rydanneal/analysis.hpp"
#include "rydanneal/errors.hpp"
#include "rydanneal/result_io.hpp"
#include "rydanneal/units.hpp"

namespace rydanneal::cli {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json result_to_json(const RunConfig& config, const engine::RunResult& result,
                            std::optional<double> wall_time_s) {
  const graphs::AtomArray& array = config.graph.array;
  const int n = array.size();
  const std::vector<double> weights = array.weights();
  const graphs::MwisResult oracle = graphs::brute_force_mwis(array, weights);

  ordered_json j;
  j["schema_version"] = kResultSchemaVersion;
  j["tool"] = "rydanneal";
  j["tool_version"] = kToolVersion;
  j["config"] = config.source;
  j["graph"] = graphs::graph_to_json(config.graph);
  j["status"] = {{"ok", result.ok}, {"failure", result.failure}};
  j["method"] = config.open_system() ? "trajectories" : "schrodinger";
  j["omega0_2pi_MHz"] = units::mhz_from_angular(config.omega0());
  j["gamma_mode"] = std::string(engine::to_string(config.open_system() ? config.gamma_mode : engine::GammaMode::off));
  j["trajectories"] = result.trajectories;
  j["samples"] = result.samples;
  j["steps"] = result.steps;
  j["jumps"] = result.jumps;
  j["norm_drift"] = result.norm_drift;

  ordered_json mwis;
  mwis["sets"] = ordered_json::array();
  for (VertexSet s : oracle.sets) mwis["sets"].push_back(s.to_string());
  mwis["total_weight_2pi_MHz"] = units::mhz_from_angular(oracle.total_weight);
  j["mwis"] = mwis;

  const auto top = std::max_element(result.distribution.begin(), result.distribution.end());
  const VertexSet argmax(static_cast<std::uint64_t>(top - result.distribution.begin()));
  ordered_json summary;
  summary["argmax"] = argmax.to_string();
  summary["argmax_probability"] = *top;
  summary["mean_density"] = result.mean_density();
  summary["phase"] = std::string(analysis::to_string(analysis::classify_phase(result.distribution, array, config.phase_threshold)));
  if (!config.tracked_states.empty()) {
    ordered_json tracked = ordered_json::object();
    for (VertexSet s : config.tracked_states) tracked[s.to_string()] = result.probability(s);
    summary["tracked"] = tracked;
  }
  j["summary"] = summary;

  ordered_json dist = ordered_json::array();
  for (std::size_t b = 0; b < result.distribution.size(); ++b) {
    const VertexSet s(static_cast<std::uint64_t>(b));
    ordered_json e;
    e["bitstring"] = s.to_bitstring(n);
    e["set"] = s.to_string();
    e["probability"] = result.distribution[b];
    e["stderr"] = b < result.std_error.size() ? result.std_error[b] : 0.0;
    e["class"] = std::string(graphs::to_string(graphs::classify_configuration(array, s, oracle)));
    dist.push_back(std::move(e));
  }
  j["distribution"] = std::move(dist);
  j["rydberg_density"] = result.rydberg_density;
  if (wall_time_s) j["wall_time_s"] = *wall_time_s;
  return j;
}

void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

LoadedResult result_from_json(const json& j) {
  LoadedResult r;
  r.raw = j;
  try {
    if (j.at("schema_version").get<int>() != kResultSchemaVersion)
      throw ConfigError("schema_version", "unsupported result schema");
    r.graph = graphs::graph_from_json(j.at("graph"));
    const std::size_t dim = std::size_t{1} << r.graph.array.size();
    r.distribution.assign(dim, 0.0);
    r.std_error.assign(dim, 0.0);
    r.classes.assign(dim, "");
    std::vector<bool> seen(dim, false);
    for (const json& e : j.at("distribution")) {
      const VertexSet s = VertexSet::from_bitstring(e.at("bitstring").get<std::string>());
      if (s.bits() >= dim || e.at("bitstring").get<std::string>().size() != static_cast<std::size_t>(r.graph.array.size()))
        throw ConfigError("distribution", "bitstring does not fit the graph");
      if (seen[s.bits()]) throw ConfigError("distribution", "duplicate bitstring " + s.to_bitstring(r.graph.array.size()));
      seen[s.bits()] = true;
      r.distribution[s.bits()] = e.at("probability").get<double>();
      if (e.contains("stderr")) r.std_error[s.bits()] = e.at("stderr").get<double>();
      if (e.contains("class")) r.classes[s.bits()] = e.at("class").get<std::string>();
    }
    r.rydberg_density = j.at("rydberg_density").get<std::vector<double>>();
    r.omega0 = units::angular_from_mhz(j.value("omega0_2pi_MHz", 0.0));
    if (j.contains("status")) r.ok = j.at("status").at("ok").get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError("result", e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("result", e.what());
  }
  return r;
}

LoadedResult load_result(const std::filesystem::path& path) { return result_from_json(read_json_file(path)); }

}  // namespace rydanneal::cli
