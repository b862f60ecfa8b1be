#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "rydanneal/analysis.hpp"
#include "rydanneal/config.hpp"
#include "rydanneal/csv.hpp"
#include "rydanneal/errors.hpp"
#include "rydanneal/result_io.hpp"
#include "rydanneal/seeding.hpp"
#include "rydanneal/sweep.hpp"

namespace rydanneal::cli {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

SweepAxis parse_axis(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "must be an object");
  SweepAxis a;
  if (!j.contains("path") || !j.at("path").is_string()) throw ConfigError(where + ".path", "missing parameter path");
  a.path = j.at("path").get<std::string>();
  if (j.contains("values")) {
    if (!j.at("values").is_array()) throw ConfigError(where + ".values", "must be a list of numbers");
    for (const json& v : j.at("values")) {
      if (!v.is_number()) throw ConfigError(where + ".values", "must be a list of numbers");
      a.values.push_back(v.get<double>());
    }
  } else {
    for (const char* k : {"start", "stop", "step"})
      if (!j.contains(k) || !j.at(k).is_number()) throw ConfigError(where + "." + k, "missing number");
    const double start = j.at("start").get<double>();
    const double stop = j.at("stop").get<double>();
    const double step = j.at("step").get<double>();
    if (!(step > 0.0) || !(stop > start)) throw ConfigError(where, "need start < stop and step > 0");
    const double count = std::floor((stop - start) / step + 1e-9);
    if (count > 1e6) throw ConfigError(where, "grid too large");
    for (long k = 0; k <= static_cast<long>(count); ++k) a.values.push_back(start + static_cast<double>(k) * step);
  }
  if (a.values.size() < 2) throw ConfigError(where + ".values", "needs at least two points");
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!std::isfinite(a.values[i])) throw ConfigError(where + ".values", "must be finite");
    if (i > 0 && !(a.values[i] > a.values[i - 1])) throw ConfigError(where + ".values", "must be strictly increasing");
  }
  return a;
}

std::string point_id(const std::vector<int>& index) {
  std::string id = "p";
  for (std::size_t k = 0; k < index.size(); ++k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%s%04d", k ? "_" : "", index[k]);
    id += buf;
  }
  return id;
}

std::string seed_path(const std::vector<int>& index) {
  std::string p = "point";
  for (int i : index) p += "/" + std::to_string(i);
  return p;
}

std::string tracked_column(VertexSet s) {
  std::string c = "P";
  if (s.empty()) return "P_empty";
  for (int v : s.indices()) c += "_" + std::to_string(v);
  return c;
}

// Pure fold of the point files listed in a manifest into aggregate.csv.
void write_aggregate(const fs::path& out, const json& manifest) {
  std::vector<std::string> axes;
  for (const json& a : manifest.at("axes")) axes.push_back(a.at("path").get<std::string>());
  std::vector<VertexSet> tracked;
  for (const json& s : manifest.at("tracked_states")) tracked.push_back(VertexSet::parse(s.get<std::string>()));

  std::ostringstream buf;
  CsvWriter csv(buf);
  std::vector<std::string> head = axes;
  for (const char* c : {"ok", "mean_density", "norm_drift", "phase", "argmax", "argmax_probability", "p_z2", "p_z3",
                        "p_z4", "order", "domain_wall_probability"})
    head.emplace_back(c);
  for (VertexSet s : tracked) head.push_back(tracked_column(s));
  csv.header(head);

  for (const json& p : manifest.at("points")) {
    for (const json& v : p.at("values")) csv.cell(v.get<double>());
    const std::string file = p.value("file", "");
    if (file.empty() || !fs::exists(out / file)) {
      csv.cell("false");
      for (std::size_t k = 0; k < head.size() - axes.size() - 1; ++k) csv.cell("");
      csv.end_row();
      continue;
    }
    const LoadedResult r = load_result(out / file);
    const graphs::AtomArray& array = r.graph.array;
    const int n = array.size();
    double threshold = 0.4;
    const json& cfg = r.raw.at("config");
    if (cfg.contains("analysis") && cfg.at("analysis").contains("phase_threshold"))
      threshold = cfg.at("analysis").at("phase_threshold").get<double>();
    double mean = 0.0;
    for (double d : r.rydberg_density) mean += d;
    mean /= n;
    const auto top = std::max_element(r.distribution.begin(), r.distribution.end());
    csv.cell(r.ok ? "true" : "false").cell(mean).cell(r.raw.at("norm_drift").get<double>());
    csv.cell(analysis::to_string(analysis::classify_phase(r.distribution, array, threshold)));
    csv.cell(VertexSet(static_cast<std::uint64_t>(top - r.distribution.begin())).to_string()).cell(*top);
    bool chain = n >= 2;
    try {
      analysis::require_chain(array);
    } catch (const std::invalid_argument&) {
      chain = false;
    }
    if (chain) {
      const analysis::OrderReport o = analysis::order_report(r.distribution, n, threshold);
      csv.cell(o.p_z2).cell(o.p_z3).cell(o.p_z4).cell(analysis::to_string(o.dominant));
      csv.cell(analysis::domain_wall_report(r.distribution, n).any_wall_prob);
    } else {
      for (int k = 0; k < 5; ++k) csv.cell("");
    }
    for (VertexSet s : tracked) csv.cell(s.bits() < r.distribution.size() ? r.distribution[s.bits()] : 0.0);
    csv.end_row();
  }
  std::ofstream f(out / "aggregate.csv", std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + (out / "aggregate.csv").string());
  f << buf.str();
}

}  // namespace

SweepSpec parse_sweep_spec(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("", "sweep spec must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "base" && key != "base_config" && key != "axes" && key != "tracked_states" && key != "budget" &&
        key != "description")
      throw ConfigError(key, "unknown field");
  SweepSpec s;
  s.source = j;
  s.base_dir = base_dir;
  if (j.contains("base") == j.contains("base_config")) throw ConfigError("base", "give exactly one of base and base_config");
  if (j.contains("base")) {
    s.base = j.at("base");
  } else {
    fs::path p = j.at("base_config").get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    s.base = read_json_file(p);
    s.base_dir = fs::absolute(p).parent_path();
  }
  if (!j.contains("axes") || !j.at("axes").is_array() || j.at("axes").empty() || j.at("axes").size() > 2)
    throw ConfigError("axes", "need one or two axes");
  for (std::size_t k = 0; k < j.at("axes").size(); ++k)
    s.axes.push_back(parse_axis(j.at("axes")[k], "axes[" + std::to_string(k) + "]"));
  if (s.axes.size() == 2 && s.axes[0].path == s.axes[1].path) throw ConfigError("axes", "both axes use the same path");
  for (const SweepAxis& a : s.axes) {
    json probe = s.base;
    set_config_value(probe, a.path, a.values.front());
  }
  if (j.contains("tracked_states")) {
    for (const json& t : j.at("tracked_states")) {
      try {
        s.tracked_states.push_back(VertexSet::parse(t.get<std::string>()));
      } catch (const std::exception& e) {
        throw ConfigError("tracked_states", e.what());
      }
    }
  }
  if (j.contains("budget")) {
    const json& b = j.at("budget");
    s.max_points = b.value("max_points", s.max_points);
    s.max_atoms = b.value("max_atoms", s.max_atoms);
  }
  return s;
}

SweepSpec load_sweep_spec(const fs::path& path) {
  return parse_sweep_spec(read_json_file(path), fs::absolute(path).parent_path());
}

SweepOutcome run_sweep(const SweepSpec& spec, std::uint64_t seed, int threads, const fs::path& out) {
  std::vector<SweepPoint> points;
  const SweepAxis& a0 = spec.axes[0];
  if (spec.axes.size() == 1) {
    for (std::size_t i = 0; i < a0.values.size(); ++i) points.push_back({{static_cast<int>(i)}, {a0.values[i]}, {}, false, {}});
  } else {
    const SweepAxis& a1 = spec.axes[1];
    for (std::size_t i = 0; i < a0.values.size(); ++i)
      for (std::size_t k = 0; k < a1.values.size(); ++k)
        points.push_back({{static_cast<int>(i), static_cast<int>(k)}, {a0.values[i], a1.values[k]}, {}, false, {}});
  }
  if (static_cast<long>(points.size()) > spec.max_points)
    throw ConfigError("budget.max_points", std::to_string(points.size()) + " grid points exceed the budget of " +
                                               std::to_string(spec.max_points));

  auto point_config = [&](const SweepPoint& p) {
    json cfg = spec.base;
    for (std::size_t k = 0; k < spec.axes.size(); ++k) set_config_value(cfg, spec.axes[k].path, p.values[k]);
    cfg["seed"] = derive_seed(seed, seed_path(p.index));
    if (!spec.tracked_states.empty()) {
      json tracked = json::array();
      for (VertexSet s : spec.tracked_states) tracked.push_back(s.to_string());
      cfg["analysis"]["tracked_states"] = tracked;
    }
    return cfg;
  };
  {
    const RunConfig first = parse_run_config(point_config(points.front()), spec.base_dir);
    if (first.graph.array.size() > spec.max_atoms)
      throw ConfigError("budget.max_atoms", std::to_string(first.graph.array.size()) +
                                                " atoms exceed the sweep budget of " + std::to_string(spec.max_atoms));
  }

  fs::create_directories(out / "points");
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      SweepPoint& p = points[i];
      try {
        const RunConfig cfg = parse_run_config(point_config(p), spec.base_dir);
        const engine::RunResult r = execute_run(cfg, 1);
        p.file = "points/" + point_id(p.index) + ".json";
        write_json_file(out / p.file, result_to_json(cfg, r));
        p.ok = r.ok;
        p.failure = r.failure;
      } catch (const std::exception& e) {
        p.ok = false;
        p.failure = e.what();
      }
    }
  };
  threads = std::clamp(threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : threads, 1,
                       static_cast<int>(points.size()));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  SweepOutcome outcome;
  ordered_json manifest;
  manifest["schema_version"] = 1;
  manifest["tool"] = "rydanneal";
  manifest["tool_version"] = kToolVersion;
  manifest["seed"] = seed;
  manifest["spec"] = spec.source;
  manifest["axes"] = ordered_json::array();
  for (const SweepAxis& a : spec.axes) manifest["axes"].push_back({{"path", a.path}, {"values", a.values}});
  manifest["tracked_states"] = ordered_json::array();
  for (VertexSet s : spec.tracked_states) manifest["tracked_states"].push_back(s.to_string());
  manifest["points"] = ordered_json::array();
  for (const SweepPoint& p : points) {
    manifest["points"].push_back(
        {{"index", p.index}, {"values", p.values}, {"file", p.file}, {"ok", p.ok}, {"failure", p.failure}});
    if (!p.ok) ++outcome.failures;
  }
  manifest["failures"] = outcome.failures;
  manifest["aggregate"] = "aggregate.csv";
  write_json_file(out / "manifest.json", manifest);
  write_aggregate(out, json::parse(manifest.dump()));
  outcome.points = std::move(points);
  return outcome;
}

void reaggregate(const fs::path& out) { write_aggregate(out, read_json_file(out / "manifest.json")); }

}  // namespace rydanneal::cli
