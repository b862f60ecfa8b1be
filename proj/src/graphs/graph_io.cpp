#include <fstream>
#include <stdexcept>

#include "rydanneal/errors.hpp"
#include "rydanneal/graph_io.hpp"
#include "rydanneal/units.hpp"

namespace rydanneal::graphs {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_json(const GraphDefinition& def) {
  ordered_json out;
  out["name"] = def.array.name();
  out["lambda_um"] = def.lambda_um;
  out["unit_disk_radius_um"] = def.array.unit_disk_radius();
  ordered_json vertices = ordered_json::array();
  for (const Vertex& v : def.array.vertices()) {
    ordered_json jv;
    jv["index"] = v.index;
    jv["xyz_um"] = {v.position.x, v.position.y, v.position.z};
    jv["species"] = std::string(to_string(v.species));
    jv["weight_2pi_MHz"] = units::mhz_from_angular(v.weight);
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  return out;
}

namespace {

template <class T>
T field(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path + key, "missing field");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path + key, "wrong type");
  }
}

}  // namespace

GraphDefinition graph_from_json(const json& j, const SpacingLimits& limits) {
  if (!j.is_object()) throw ConfigError("", "graph definition must be an object");
  GraphDefinition def;
  const std::string name = j.contains("name") ? field<std::string>(j, "name", "") : std::string("graph");
  def.lambda_um = j.contains("lambda_um") ? field<double>(j, "lambda_um", "") : 0.0;
  double radius = def.lambda_um;
  if (j.contains("unit_disk_radius_um")) radius = field<double>(j, "unit_disk_radius_um", "");
  if (!(radius > 0.0)) throw ConfigError("unit_disk_radius_um", "must be positive (or give lambda_um)");

  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw ConfigError("vertices", "must be an array");
  std::vector<Vertex> vertices;
  std::size_t k = 0;
  for (const json& jv : j.at("vertices")) {
    const std::string path = "vertices[" + std::to_string(k++) + "].";
    Vertex v;
    v.index = field<int>(jv, "index", path);
    const auto xyz = field<std::vector<double>>(jv, "xyz_um", path);
    if (xyz.size() != 3) throw ConfigError(path + "xyz_um", "needs exactly three coordinates");
    v.position = {xyz[0], xyz[1], xyz[2]};
    if (jv.contains("species")) {
      try {
        v.species = species_from_string(field<std::string>(jv, "species", path));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(path + "species", e.what());
      }
    }
    v.weight = units::angular_from_mhz(jv.contains("weight_2pi_MHz") ? field<double>(jv, "weight_2pi_MHz", path) : 1.0);
    vertices.push_back(v);
  }
  try {
    def.array = AtomArray(name, std::move(vertices), radius, limits);
  } catch (const SpacingError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("vertices", e.what());
  }
  return def;
}

GraphDefinition load_graph_file(const std::filesystem::path& path, const SpacingLimits& limits) {
  std::ifstream in(path);
  if (!in) throw ConfigError("graph", "cannot open graph file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("graph", path.string() + ": " + e.what());
  }
  return graph_from_json(j, limits);
}

void save_graph_file(const std::filesystem::path& path, const GraphDefinition& def) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << graph_to_json(def).dump(2) << '\n';
}

}  // namespace rydanneal::graphs
