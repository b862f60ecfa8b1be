#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "rydanneal/analysis.hpp"
#include "rydanneal/commands.hpp"
#include "rydanneal/config.hpp"
#include "rydanneal/csv.hpp"
#include "rydanneal/errors.hpp"
#include "rydanneal/graph_io.hpp"
#include "rydanneal/result_io.hpp"
#include "rydanneal/sweep.hpp"
#include "rydanneal/units.hpp"
#include "rydanneal/verify.hpp"

namespace rydanneal::cli {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

fs::path output_file(const fs::path& out, const char* default_name) {
  if (out.empty()) return default_name;
  if (out.extension() == ".json") return out;
  return out / default_name;
}

// A graph file, or the graph of a run config.
graphs::GraphDefinition load_any_graph(const fs::path& path) {
  const json j = read_json_file(path);
  if (j.is_object() && j.contains("vertices")) return graphs::load_graph_file(path);
  return parse_run_config(j, fs::absolute(path).parent_path()).graph;
}

}  // namespace

int command_run(const fs::path& config_path, const CommonOptions& opts, bool wall_time, std::ostream& log) {
  json j = read_json_file(config_path);
  if (opts.seed) j["seed"] = *opts.seed;
  const RunConfig cfg = parse_run_config(j, fs::absolute(config_path).parent_path());

  const auto start = std::chrono::steady_clock::now();
  const engine::RunResult r = execute_run(cfg, opts.threads);
  std::optional<double> elapsed;
  if (wall_time) elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const fs::path file = output_file(opts.out, "result.json");
  write_json_file(file, result_to_json(cfg, r, elapsed));

  const auto top = std::max_element(r.distribution.begin(), r.distribution.end());
  log << "wrote " << file.string() << "\n"
      << "argmax " << VertexSet(static_cast<std::uint64_t>(top - r.distribution.begin())).to_string() << " p="
      << format_number(*top) << ", <n>=" << format_number(r.mean_density())
      << ", norm drift=" << format_number(r.norm_drift) << "\n";
  if (!r.ok) {
    log << "run failed: " << r.failure << "\n";
    return kEngineFailure;
  }
  return kOk;
}

int command_sweep(const fs::path& spec_path, const CommonOptions& opts, std::ostream& log) {
  const SweepSpec spec = load_sweep_spec(spec_path);
  const std::uint64_t seed = opts.seed.value_or(spec.base.value("seed", kDefaultSeed));
  const fs::path out = opts.out.empty() ? fs::path("sweep_out") : opts.out;
  const SweepOutcome outcome = run_sweep(spec, seed, opts.threads, out);
  log << "ran " << outcome.points.size() << " points into " << out.string() << ", " << outcome.failures
      << " failed\n";
  for (const SweepPoint& p : outcome.points)
    if (!p.ok) log << "  point " << p.file << ": " << p.failure << "\n";
  return outcome.failures == 0 ? kOk : kEngineFailure;
}

int command_reaggregate(const fs::path& dir, std::ostream& log) {
  reaggregate(dir);
  log << "rewrote " << (dir / "aggregate.csv").string() << "\n";
  return kOk;
}

int command_oracle(const fs::path& graph_path, std::ostream& out, bool as_json) {
  const graphs::GraphDefinition def = load_any_graph(graph_path);
  const graphs::AtomArray& a = def.array;
  const std::vector<double> w = a.weights();
  const graphs::MwisResult best = graphs::brute_force_mwis(a, w);
  const std::vector<graphs::WeightedSet> all = graphs::enumerate_independent_sets(a, w);

  if (as_json) {
    ordered_json j;
    j["graph"] = a.name();
    j["vertices"] = a.size();
    j["edges"] = ordered_json::array();
    for (const auto& [p, q] : a.edges()) j["edges"].push_back({p, q});
    j["mwis"] = ordered_json::array();
    for (VertexSet s : best.sets) j["mwis"].push_back(s.to_string());
    j["total_weight_2pi_MHz"] = units::mhz_from_angular(best.total_weight);
    j["independent_sets"] = ordered_json::array();
    for (const auto& ws : all)
      j["independent_sets"].push_back({{"set", ws.set.to_string()}, {"weight_2pi_MHz", units::mhz_from_angular(ws.weight)}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "graph " << a.name() << ": " << a.size() << " vertices, " << a.edges().size() << " edges\n";
  out << "edges:";
  for (const auto& [p, q] : a.edges()) out << " (" << p << "," << q << ")";
  out << "\nMWIS total weight " << format_number(units::mhz_from_angular(best.total_weight)) << " MHz:";
  for (VertexSet s : best.sets) out << " " << s.to_string();
  out << "\nindependent sets by weight:\n";
  for (const auto& ws : all)
    out << "  " << std::setw(24) << std::left << ws.set.to_string() << format_number(units::mhz_from_angular(ws.weight))
        << "\n";
  return kOk;
}

int command_verify(const fs::path& result, std::ostream& out) {
  const LoadedResult r = load_result(result);
  const VerifyReport report = verify_result(r);
  for (const Check& c : report.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  out << (report.passed() ? "verification passed\n" : "verification failed\n");
  return report.passed() ? kOk : kVerifyFailure;
}

int command_graph_export(const std::string& name, double lambda_um, const fs::path& out, std::ostream& log) {
  std::vector<graphs::LibraryGraph> which;
  if (name.empty()) {
    which = graphs::all_library_graphs();
  } else {
    try {
      which.push_back(graphs::library_graph_from_string(name));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("name", e.what());
    }
  }
  if (!(lambda_um > 0.0)) throw ConfigError("lambda", "must be positive");
  for (graphs::LibraryGraph g : which) {
    // Exported with 1 MHz weights so the file reads as unit weights.
    const graphs::GraphDefinition def{lambda_um,
                                      graphs::library_graph(g, lambda_um).with_uniform_weight(units::angular_from_mhz(1.0))};
    fs::path file;
    if (which.size() == 1 && out.extension() == ".json") {
      file = out;
    } else {
      file = (out.empty() ? fs::path(".") : out) / (std::string(graphs::to_string(g)) + ".json");
    }
    if (file.has_parent_path()) fs::create_directories(file.parent_path());
    graphs::save_graph_file(file, def);
    log << "wrote " << file.string() << "\n";
  }
  return kOk;
}

int command_analyze_ranked(const fs::path& result, std::ostream& out) {
  const LoadedResult r = load_result(result);
  const auto ranked = analysis::rank_solutions(r.distribution, r.graph.array, r.graph.array.weights());
  CsvWriter csv(out);
  csv.header({"rank", "set", "bitstring", "probability", "stderr", "class"});
  long long rank = 1;
  for (const auto& s : ranked) {
    csv.cell(rank++).cell(s.set.to_string()).cell(s.set.to_bitstring(r.graph.array.size()));
    csv.cell(s.probability).cell(r.std_error[s.set.bits()]).cell(graphs::to_string(s.cls));
    csv.end_row();
  }
  return kOk;
}

namespace {

struct SweepData {
  std::vector<std::string> axes;
  std::vector<std::pair<std::vector<double>, LoadedResult>> points;
};

SweepData load_sweep_dir(const fs::path& dir) {
  const json manifest = read_json_file(dir / "manifest.json");
  SweepData d;
  for (const json& a : manifest.at("axes")) d.axes.push_back(a.at("path").get<std::string>());
  for (const json& p : manifest.at("points")) {
    const std::string file = p.value("file", "");
    if (file.empty() || !p.value("ok", false)) continue;
    d.points.emplace_back(p.at("values").get<std::vector<double>>(), load_result(dir / file));
  }
  return d;
}

}  // namespace

int command_analyze_susceptibility(const fs::path& sweep_dir, std::ostream& out) {
  const SweepData d = load_sweep_dir(sweep_dir);
  if (d.axes.size() != 1) throw ConfigError("axes", "susceptibility needs a one-axis sweep");
  std::vector<std::pair<double, double>> pts;
  for (const auto& [values, r] : d.points) {
    double mean = 0.0;
    for (double n : r.rydberg_density) mean += n;
    pts.emplace_back(values[0], mean / static_cast<double>(r.rydberg_density.size()));
  }
  analysis::SusceptibilityCurve curve;
  try {
    curve = analysis::susceptibility_curve(pts);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("sweep", e.what());
  }
  CsvWriter csv(out);
  csv.header({d.axes[0], "density", "chi", "critical_detuning", "flag"});
  for (const auto& s : curve.samples) {
    csv.cell(s.delta_f).cell(s.density).cell(s.chi);
    if (curve.critical_detuning) csv.cell(*curve.critical_detuning);
    else csv.cell("");
    csv.cell(curve.flag);
    csv.end_row();
  }
  return kOk;
}

int command_analyze_phase_grid(const fs::path& sweep_dir, std::ostream& out) {
  const SweepData d = load_sweep_dir(sweep_dir);
  if (d.axes.size() != 2) throw ConfigError("axes", "a phase grid needs a two-axis sweep");
  const json manifest = read_json_file(sweep_dir / "manifest.json");
  std::vector<VertexSet> tracked;
  for (const json& s : manifest.at("tracked_states")) tracked.push_back(VertexSet::parse(s.get<std::string>()));

  CsvWriter csv(out);
  std::vector<std::string> head = {d.axes[0], d.axes[1], "phase"};
  for (VertexSet s : tracked) head.push_back("P" + s.to_string());
  csv.header(head);
  for (const auto& [values, r] : d.points) {
    double threshold = 0.4;
    const json& cfg = r.raw.at("config");
    if (cfg.contains("analysis") && cfg.at("analysis").contains("phase_threshold"))
      threshold = cfg.at("analysis").at("phase_threshold").get<double>();
    csv.cell(values[0]).cell(values[1]);
    csv.cell(analysis::to_string(analysis::classify_phase(r.distribution, r.graph.array, threshold)));
    for (VertexSet s : tracked) csv.cell(r.distribution.at(s.bits()));
    csv.end_row();
  }
  return kOk;
}

int command_analyze_walls(const fs::path& result, std::ostream& out) {
  const LoadedResult r = load_result(result);
  try {
    analysis::require_chain(r.graph.array);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("graph", e.what());
  }
  const int n = r.graph.array.size();
  CsvWriter csv(out);
  csv.header({"bitstring", "set", "probability", "type_i", "type_ii", "longer"});
  for (std::size_t b = 0; b < r.distribution.size(); ++b) {
    if (r.distribution[b] <= 0.0) continue;
    const VertexSet s(static_cast<std::uint64_t>(b));
    const analysis::DomainWalls w = analysis::detect_domain_walls(s, n);
    // Site 1 first, matching the chain's left-to-right layout.
    std::string sites = s.to_bitstring(n);
    std::reverse(sites.begin(), sites.end());
    csv.cell(sites).cell(s.to_string()).cell(r.distribution[b]);
    csv.cell(static_cast<long long>(w.type_i)).cell(static_cast<long long>(w.type_ii)).cell(static_cast<long long>(w.longer));
    csv.end_row();
  }
  return kOk;
}

}  // namespace rydanneal::cli
