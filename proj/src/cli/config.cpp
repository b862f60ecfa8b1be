#include <cmath>
#include <fstream>
#include <sstream>

#include "rydanneal/config.hpp"
#include "rydanneal/errors.hpp"
#include "rydanneal/seeding.hpp"
#include "rydanneal/units.hpp"

namespace rydanneal::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Thin reader over one JSON object that reports dotted paths in errors and
// rejects unknown keys.
class Block {
 public:
  Block(const json& j, std::string path, std::initializer_list<const char*> allowed) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "must be an object");
    for (const auto& [key, value] : j_.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) throw ConfigError(at(key), "unknown field");
    }
  }

  bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }
  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  const json& raw(const char* key) const { return j_.at(key); }

  double number(const char* key) const {
    if (!has(key)) throw ConfigError(at(key), "missing field");
    const json& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(at(key), "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(at(key), "must be finite");
    return d;
  }
  double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

  double positive(const char* key) const {
    const double d = number(key);
    if (!(d > 0.0)) throw ConfigError(at(key), "must be positive");
    return d;
  }

  long long integer(const char* key, long long fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number_integer()) throw ConfigError(at(key), "must be an integer");
    return v.get<long long>();
  }

  std::string text(const char* key, std::string fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) throw ConfigError(at(key), "must be a string");
    return v.get<std::string>();
  }

  Block child(const char* key, std::initializer_list<const char*> allowed) const {
    return Block(j_.at(key), at(key), allowed);
  }

 private:
  const json& j_;
  std::string path_;
};

engine::PairCoefficients parse_pair(const Block& b, engine::PairCoefficients fallback) {
  engine::PairCoefficients p = fallback;
  if (b.has("c6_2pi_GHz_um6")) p.c6 = units::angular_from_ghz(b.positive("c6_2pi_GHz_um6"));
  if (b.has("c3_2pi_GHz_um3")) p.c3 = units::angular_from_ghz(b.positive("c3_2pi_GHz_um3"));
  if (b.has("r_vdw_um")) p.r_vdw = b.positive("r_vdw_um");
  if (b.has("r_lr_um")) p.r_lr = b.positive("r_lr_um");
  return p;
}

engine::InteractionTable parse_interaction(const json& root) {
  const engine::InteractionTable d = engine::InteractionTable::defaults();
  if (!root.contains("interaction")) return d;
  static constexpr std::initializer_list<const char*> kPairKeys = {"c6_2pi_GHz_um6", "c3_2pi_GHz_um3", "r_vdw_um",
                                                                    "r_lr_um"};
  const Block b(root.at("interaction"), "interaction",
                {"graph_graph", "graph_wire", "wire_wire", "graph_lifetime_us", "wire_lifetime_us"});
  using graphs::Species;
  auto pair = [&](const char* key, Species s1, Species s2) {
    return b.has(key) ? parse_pair(b.child(key, kPairKeys), d.pair(s1, s2)) : d.pair(s1, s2);
  };
  engine::SpeciesProperties g = d.species(Species::graph);
  engine::SpeciesProperties w = d.species(Species::wire);
  if (b.has("graph_lifetime_us")) g.intermediate_lifetime = b.positive("graph_lifetime_us");
  if (b.has("wire_lifetime_us")) w.intermediate_lifetime = b.positive("wire_lifetime_us");
  try {
    return engine::InteractionTable(pair("graph_graph", Species::graph, Species::graph),
                                    pair("graph_wire", Species::graph, Species::wire),
                                    pair("wire_wire", Species::wire, Species::wire), g, w);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("interaction", e.what());
  }
}

struct ScheduleBlock {
  drive::ScheduleParams params;
  double population_factor = 0.0;
};

// Default one-photon parameters: Ω1013 = 50 MHz at Δm = 570 MHz.
constexpr double kDefaultPopulationFactor = (50.0 / (2.0 * 570.0)) * (50.0 / (2.0 * 570.0));

ScheduleBlock parse_schedule(const json& root) {
  if (!root.contains("schedule")) throw ConfigError("schedule", "missing block");
  const Block b(root.at("schedule"), "schedule",
                {"omega0_2pi_MHz", "one_photon", "delta0_2pi_MHz", "alpha_d", "tau_us", "tf1_us", "tf2_us"});
  ScheduleBlock out;
  out.population_factor = kDefaultPopulationFactor;
  if (b.has("omega0_2pi_MHz") == b.has("one_photon"))
    throw ConfigError("schedule", "give exactly one of omega0_2pi_MHz and one_photon");
  if (b.has("omega0_2pi_MHz")) {
    const double om = b.number("omega0_2pi_MHz");
    if (om < 0.0) throw ConfigError(b.at("omega0_2pi_MHz"), "must be non-negative");
    out.params.omega0 = units::angular_from_mhz(om);
  } else {
    const Block p = b.child("one_photon", {"omega420_2pi_MHz", "omega1013_2pi_MHz", "delta_m_2pi_MHz"});
    const double o420 = p.number("omega420_2pi_MHz");
    const double o1013 = p.number("omega1013_2pi_MHz");
    const double dm = p.number("delta_m_2pi_MHz");
    if (dm == 0.0) throw ConfigError(p.at("delta_m_2pi_MHz"), "must be non-zero");
    out.params.omega0 = units::angular_from_mhz(std::abs(drive::two_photon_rabi(o420, o1013, dm)));
    const double r = o1013 / (2.0 * dm);
    out.population_factor = r * r;
  }
  out.params.delta0 = units::angular_from_mhz(b.number("delta0_2pi_MHz"));
  out.params.alpha_d = b.number("alpha_d", 1.0);
  if (!(out.params.alpha_d > 0.0)) throw ConfigError(b.at("alpha_d"), "must be positive");
  out.params.tau = b.positive("tau_us");
  if (b.has("tf1_us")) out.params.tf1 = b.positive("tf1_us");
  if (b.has("tf2_us")) out.params.tf2 = b.positive("tf2_us");
  return out;
}

// Scales every position and the unit-disk radius by `factor`.
graphs::AtomArray rescale(const graphs::AtomArray& a, double factor, const graphs::SpacingLimits& limits) {
  std::vector<graphs::Vertex> v = a.vertices();
  for (auto& x : v) x.position = factor * x.position;
  return graphs::AtomArray(a.name(), std::move(v), factor * a.unit_disk_radius(), limits);
}

graphs::GraphDefinition parse_graph(const json& root, const fs::path& base_dir, double omega0,
                                    const engine::InteractionTable& table, json& echo) {
  if (!root.contains("graph")) throw ConfigError("graph", "missing block");
  const Block b(root.at("graph"), "graph",
                {"file", "inline", "library", "chain", "atoms", "lambda_um", "rb_over_lambda", "spacing_um",
                 "rb_over_a", "radius_um", "weights_2pi_MHz", "delta_f_2pi_MHz", "delta_f_over_omega0",
                 "wire_weight_2pi_MHz", "wire_weight_over_omega0"});
  const graphs::SpacingLimits limits = table.spacing_limits();
  const int sources = b.has("file") + b.has("inline") + b.has("library") + b.has("chain");
  if (sources != 1) throw ConfigError("graph", "give exactly one of file, inline, library and chain");

  auto blockade = [&](const char* key) {
    if (!(omega0 > 0.0)) throw ConfigError(b.at(key), "needs a positive Rabi frequency");
    return drive::blockade_radius(table.pair(graphs::Species::graph, graphs::Species::graph).c6, omega0);
  };
  auto length = [&](const char* direct, const char* ratio) -> std::optional<double> {
    if (b.has(direct) && b.has(ratio)) throw ConfigError("graph", std::string("give only one of ") + direct + " and " + ratio);
    if (b.has(direct)) return b.positive(direct);
    if (b.has(ratio)) return blockade(ratio) / b.positive(ratio);
    return std::nullopt;
  };

  graphs::GraphDefinition def;
  try {
    if (b.has("file") || b.has("inline")) {
      if (b.has("file")) {
        fs::path p = b.text("file", "");
        if (p.is_relative()) p = base_dir / p;
        p = fs::absolute(p).lexically_normal();
        echo["graph"]["file"] = p.string();
        def = graphs::load_graph_file(p, limits);
      } else {
        def = graphs::graph_from_json(b.raw("inline"), limits);
      }
      if (auto lambda = length("lambda_um", "rb_over_lambda")) {
        if (!(def.lambda_um > 0.0)) throw ConfigError(b.at("lambda_um"), "graph file has no lambda_um to rescale");
        def.array = rescale(def.array, *lambda / def.lambda_um, limits);
        def.lambda_um = *lambda;
      }
    } else if (b.has("library")) {
      graphs::LibraryGraph g;
      try {
        g = graphs::library_graph_from_string(b.text("library", ""));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(b.at("library"), e.what());
      }
      const auto lambda = length("lambda_um", "rb_over_lambda");
      if (!lambda) throw ConfigError("graph", "library graphs need lambda_um or rb_over_lambda");
      def.lambda_um = *lambda;
      def.array = graphs::library_graph(g, *lambda, limits);
    } else {
      const long long atoms = b.integer("chain", 0);
      if (atoms < 1 || atoms > graphs::kMaxArraySize) throw ConfigError(b.at("chain"), "atom count must be in 1..64");
      const auto a = length("spacing_um", "rb_over_a");
      if (!a) throw ConfigError("graph", "chains need spacing_um or rb_over_a");
      def.lambda_um = *a;
      def.array = graphs::linear_chain(static_cast<int>(atoms), *a, limits);
    }
    if (b.has("radius_um")) {
      std::vector<graphs::Vertex> v = def.array.vertices();
      def.array = graphs::AtomArray(def.array.name(), std::move(v), b.positive("radius_um"), limits);
    }
  } catch (const SpacingError& e) {
    throw ConfigError("graph", e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("graph", e.what());
  }

  if (b.has("weights_2pi_MHz")) {
    const json& w = b.raw("weights_2pi_MHz");
    if (!w.is_array() || w.size() != static_cast<std::size_t>(def.array.size()))
      throw ConfigError(b.at("weights_2pi_MHz"), "needs one number per vertex");
    std::vector<double> ws;
    for (const json& x : w) {
      if (!x.is_number()) throw ConfigError(b.at("weights_2pi_MHz"), "must contain numbers");
      ws.push_back(units::angular_from_mhz(x.get<double>()));
    }
    def.array = def.array.with_weights(ws);
  }
  if (b.has("delta_f_2pi_MHz") && b.has("delta_f_over_omega0"))
    throw ConfigError("graph", "give only one of delta_f_2pi_MHz and delta_f_over_omega0");
  if (b.has("delta_f_2pi_MHz"))
    def.array = def.array.with_species_weight(graphs::Species::graph, units::angular_from_mhz(b.number("delta_f_2pi_MHz")));
  if (b.has("delta_f_over_omega0"))
    def.array = def.array.with_species_weight(graphs::Species::graph, b.number("delta_f_over_omega0") * omega0);
  if (b.has("wire_weight_2pi_MHz") && b.has("wire_weight_over_omega0"))
    throw ConfigError("graph", "give only one of wire_weight_2pi_MHz and wire_weight_over_omega0");
  if (b.has("wire_weight_2pi_MHz"))
    def.array = def.array.with_species_weight(graphs::Species::wire, units::angular_from_mhz(b.number("wire_weight_2pi_MHz")));
  if (b.has("wire_weight_over_omega0"))
    def.array = def.array.with_species_weight(graphs::Species::wire, b.number("wire_weight_over_omega0") * omega0);
  return def;
}

std::optional<engine::DisorderModel> parse_disorder(const json& root, std::uint64_t seed) {
  if (!root.contains("disorder") || root.at("disorder").is_null()) return std::nullopt;
  const Block b(root.at("disorder"), "disorder",
                {"sigma_x_um", "sigma_y_um", "sigma_z_um", "radial_um", "radial_interpretation", "axial_um",
                 "samples", "distribution", "seed"});
  engine::DisorderModel m;
  if (b.has("radial_um")) {
    if (b.has("sigma_x_um") || b.has("sigma_y_um"))
      throw ConfigError("disorder", "give either radial_um or sigma_x_um/sigma_y_um");
    const double r = b.number("radial_um");
    const std::string how = b.text("radial_interpretation", "per_axis");
    if (how == "per_axis") {
      m.sigma_x = m.sigma_y = r;
    } else if (how == "quadrature") {
      m.sigma_x = m.sigma_y = r / std::sqrt(2.0);
    } else {
      throw ConfigError(b.at("radial_interpretation"), "expected per_axis or quadrature");
    }
  } else {
    m.sigma_x = b.number("sigma_x_um", 0.0);
    m.sigma_y = b.number("sigma_y_um", 0.0);
  }
  if (b.has("axial_um") && b.has("sigma_z_um")) throw ConfigError("disorder", "give only one of axial_um and sigma_z_um");
  m.sigma_z = b.has("axial_um") ? b.number("axial_um") : b.number("sigma_z_um", 0.0);
  const long long samples = b.integer("samples", 1);
  if (samples < 1 || samples > 1000000) throw ConfigError(b.at("samples"), "must be in 1..1e6");
  m.samples = static_cast<int>(samples);
  const std::string dist = b.text("distribution", "gaussian");
  if (dist == "gaussian") m.distribution = engine::DisorderDistribution::gaussian;
  else if (dist == "uniform") m.distribution = engine::DisorderDistribution::uniform;
  else throw ConfigError(b.at("distribution"), "expected gaussian or uniform");
  m.seed = b.has("seed") ? static_cast<std::uint64_t>(b.integer("seed", 0)) : derive_seed(seed, "disorder");
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("disorder", e.what());
  }
  return m;
}

}  // namespace

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", path.string() + ": " + e.what());
  }
}

RunConfig parse_run_config(const json& j, const fs::path& base_dir) {
  const Block root(j, "",
                   {"graph", "schedule", "interaction", "dissipation", "disorder", "numerics", "analysis", "seed",
                    "description"});
  RunConfig c;
  c.source = j;
  if (root.has("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw ConfigError("seed", "must be a non-negative integer");
    c.seed = s.get<std::uint64_t>();
  } else {
    c.seed = kDefaultSeed;
  }
  c.source["seed"] = c.seed;

  c.table = parse_interaction(j);
  const ScheduleBlock sched = parse_schedule(j);
  c.schedule = sched.params;
  c.population_factor = sched.population_factor;
  c.graph = parse_graph(j, base_dir, c.schedule.omega0, c.table, c.source);
  c.schedule.delta_f = c.graph.array.weights();
  try {
    drive::DriveSchedule check(c.schedule);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("schedule", e.what());
  }

  if (root.has("dissipation")) {
    const Block b = root.child("dissipation", {"gamma_mode", "trajectories", "population_factor"});
    try {
      c.gamma_mode = engine::gamma_mode_from_string(b.text("gamma_mode", "scaled"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(b.at("gamma_mode"), e.what());
    }
    const long long n = b.integer("trajectories", 100);
    if (n < 0 || n > 10000000) throw ConfigError(b.at("trajectories"), "must be in 0..1e7");
    c.trajectories = static_cast<int>(n);
    if (b.has("population_factor")) {
      c.population_factor = b.number("population_factor");
      if (c.population_factor < 0.0) throw ConfigError(b.at("population_factor"), "must be non-negative");
    }
  }

  c.disorder = parse_disorder(j, c.seed);

  if (root.has("numerics")) {
    const Block b = root.child("numerics", {"max_phase_per_step", "max_atoms", "norm_tolerance"});
    c.options.max_phase_per_step = b.number("max_phase_per_step", c.options.max_phase_per_step);
    if (!(c.options.max_phase_per_step > 0.0) || c.options.max_phase_per_step > 1.0)
      throw ConfigError(b.at("max_phase_per_step"), "must be in (0, 1]");
    const long long m = b.integer("max_atoms", c.options.max_atoms);
    if (m < 1 || m > 24) throw ConfigError(b.at("max_atoms"), "must be in 1..24");
    c.options.max_atoms = static_cast<int>(m);
    c.options.norm_tolerance = b.number("norm_tolerance", c.options.norm_tolerance);
    if (!(c.options.norm_tolerance > 0.0)) throw ConfigError(b.at("norm_tolerance"), "must be positive");
  }
  if (c.graph.array.size() > c.options.max_atoms)
    throw ConfigError("graph", std::to_string(c.graph.array.size()) + " atoms exceed numerics.max_atoms = " +
                                   std::to_string(c.options.max_atoms));

  if (root.has("analysis")) {
    const Block b = root.child("analysis", {"phase_threshold", "tracked_states"});
    c.phase_threshold = b.number("phase_threshold", 0.4);
    if (!(c.phase_threshold > 0.0 && c.phase_threshold <= 1.0))
      throw ConfigError(b.at("phase_threshold"), "must be in (0, 1]");
    if (b.has("tracked_states")) {
      const json& ts = b.raw("tracked_states");
      if (!ts.is_array()) throw ConfigError(b.at("tracked_states"), "must be a list of sets");
      for (const json& s : ts) {
        try {
          VertexSet v = VertexSet::parse(s.get<std::string>());
          if (c.graph.array.size() < 64 && (v.bits() >> c.graph.array.size()) != 0)
            throw std::invalid_argument("vertex beyond the graph");
          c.tracked_states.push_back(v);
        } catch (const std::exception& e) {
          throw ConfigError(b.at("tracked_states"), e.what());
        }
      }
    }
  }
  return c;
}

RunConfig load_run_config(const fs::path& path) {
  return parse_run_config(read_json_file(path), fs::absolute(path).parent_path());
}

void set_config_value(json& config, const std::string& dotted_path, const json& value) {
  json* node = &config;
  std::istringstream in(dotted_path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, '.')) parts.push_back(part);
  if (parts.empty()) throw ConfigError(dotted_path, "empty parameter path");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!node->is_object() || !node->contains(parts[i]))
      throw ConfigError(dotted_path, "parameter path does not resolve to an existing config field");
    node = &(*node)[parts[i]];
  }
  *node = value;
}

engine::RunResult execute_run(const RunConfig& config, int threads) {
  const engine::InteractionTable& table = config.table;
  engine::RunOptions opts = config.options;
  opts.threads = threads;

  auto run_one = [&](const graphs::AtomArray& array, std::uint64_t seed) {
    const drive::DriveSchedule schedule(config.schedule);
    if (config.open_system()) {
      const std::vector<double> gamma =
          engine::decay_rates(array, table, config.gamma_mode, config.population_factor);
      return engine::propagate_trajectories(array, table, schedule, gamma, config.trajectories, seed, opts);
    }
    return engine::propagate_tdse(array, table, schedule, opts);
  };

  try {
    if (!config.disorder) return run_one(config.graph.array, derive_seed(config.seed, "sample/0"));
    const std::vector<graphs::AtomArray> samples =
        engine::sample_disorder(config.graph.array, *config.disorder, table.spacing_limits());
    std::vector<engine::RunResult> runs;
    runs.reserve(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) runs.push_back(run_one(samples[k], derive_seed(config.seed, "sample", k)));
    return engine::average_samples(runs);
  } catch (const std::domain_error& e) {
    throw EngineError(e.what());
  }
}

}  // namespace rydanneal::cli
