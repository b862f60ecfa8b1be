#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rydanneal/errors.hpp"
#include "rydanneal/graphs.hpp"

namespace rydanneal {

namespace {

std::string describe_spacing(int first, int second, double distance, double limit) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "atoms %d and %d are %.6g um apart, below the Leroy radius %.6g um", first, second,
                distance, limit);
  return buf;
}

}  // namespace

SpacingError::SpacingError(int first, int second, double distance, double limit)
    : std::invalid_argument(describe_spacing(first, second, distance, limit)), first_(first), second_(second) {}

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 1 || v > 64) throw std::out_of_range("vertex index out of range");
    bits_ |= std::uint64_t{1} << (v - 1);
  }
}

VertexSet VertexSet::from_indices(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 1 || v > 64) throw std::out_of_range("vertex index out of range");
    s.bits_ |= std::uint64_t{1} << (v - 1);
  }
  return s;
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : indices()) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string VertexSet::to_bitstring(int n) const {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(n - 1 - i)] = '1';
  return out;
}

VertexSet VertexSet::from_bitstring(const std::string& bits) {
  if (bits.size() > 64) throw std::invalid_argument("bitstring longer than 64 sites");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring may only contain 0 and 1: " + bits);
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return VertexSet(v);
}

VertexSet VertexSet::parse(const std::string& text) {
  auto first = text.find('{');
  auto last = text.rfind('}');
  if (first == std::string::npos || last == std::string::npos || last < first)
    throw std::invalid_argument("vertex set must look like {1, 3}: " + text);
  std::vector<int> members;
  std::string body = text.substr(first + 1, last - first - 1);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("bad vertex index '" + token + "' in " + text);
    members.push_back(v);
  }
  return from_indices(members);
}

namespace graphs {

std::string_view to_string(Species s) { return s == Species::graph ? "graph" : "wire"; }

Species species_from_string(std::string_view name) {
  if (name == "graph") return Species::graph;
  if (name == "wire") return Species::wire;
  throw std::invalid_argument("unknown species '" + std::string(name) + "' (expected graph or wire)");
}

double SpacingLimits::operator()(Species a, Species b) const {
  if (a == Species::graph && b == Species::graph) return graph_graph;
  if (a == Species::wire && b == Species::wire) return wire_wire;
  return graph_wire;
}

AtomArray::AtomArray(std::string name, std::vector<Vertex> vertices, double unit_disk_radius,
                     const SpacingLimits& limits)
    : name_(std::move(name)), vertices_(std::move(vertices)), radius_(unit_disk_radius) {
  if (vertices_.empty()) throw std::invalid_argument("an atom array needs at least one vertex");
  if (vertices_.size() > static_cast<std::size_t>(kMaxArraySize))
    throw std::invalid_argument("at most 64 atoms are supported");
  if (!(radius_ > 0.0)) throw std::invalid_argument("unit-disk radius must be positive");

  std::sort(vertices_.begin(), vertices_.end(), [](const Vertex& a, const Vertex& b) { return a.index < b.index; });
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (vertices_[k].index != static_cast<int>(k) + 1)
      throw std::invalid_argument("vertex indices must be contiguous 1..N without duplicates");
  }

  const int n = size();
  adjacency_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vertex& a = vertices_[static_cast<std::size_t>(i)];
      const Vertex& b = vertices_[static_cast<std::size_t>(j)];
      const double d = distance(a.position, b.position);
      if (d == 0.0) throw std::invalid_argument("atoms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                " share a position");
      const double limit = limits(a.species, b.species);
      if (d <= limit) throw SpacingError(i + 1, j + 1, d, limit);
      if (d <= radius_) {
        edges_.emplace_back(i + 1, j + 1);
        adjacency_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adjacency_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
}

bool AtomArray::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw std::out_of_range("vertex index out of range");
  return (adjacency_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u;
}

std::vector<double> AtomArray::weights() const {
  std::vector<double> w;
  w.reserve(vertices_.size());
  for (const Vertex& v : vertices_) w.push_back(v.weight);
  return w;
}

std::vector<Vec3> AtomArray::positions() const {
  std::vector<Vec3> p;
  p.reserve(vertices_.size());
  for (const Vertex& v : vertices_) p.push_back(v.position);
  return p;
}

AtomArray AtomArray::with_positions(const std::vector<Vec3>& positions, const SpacingLimits& limits) const {
  if (positions.size() != vertices_.size()) throw std::invalid_argument("position count does not match atom count");
  std::vector<Vertex> moved = vertices_;
  for (std::size_t k = 0; k < moved.size(); ++k) moved[k].position = positions[k];
  return AtomArray(name_, std::move(moved), radius_, limits);
}

AtomArray AtomArray::with_weights(std::span<const double> weights) const {
  if (weights.size() != vertices_.size()) throw std::invalid_argument("weight count does not match atom count");
  AtomArray copy = *this;
  for (std::size_t k = 0; k < copy.vertices_.size(); ++k) copy.vertices_[k].weight = weights[k];
  return copy;
}

AtomArray AtomArray::with_uniform_weight(double weight) const {
  AtomArray copy = *this;
  for (Vertex& v : copy.vertices_) v.weight = weight;
  return copy;
}

AtomArray AtomArray::with_species_weight(Species species, double weight) const {
  AtomArray copy = *this;
  for (Vertex& v : copy.vertices_)
    if (v.species == species) v.weight = weight;
  return copy;
}

AtomArray build_unit_disk_graph(const std::vector<Vec3>& positions, double radius, const SpacingLimits& limits) {
  if (positions.empty()) throw std::invalid_argument("need at least one position");
  std::vector<Vertex> vertices;
  vertices.reserve(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k)
    vertices.push_back(Vertex{static_cast<int>(k) + 1, positions[k], Species::graph, 1.0});
  return AtomArray("unit-disk", std::move(vertices), radius, limits);
}

AtomArray attach_wire(const AtomArray& base, const std::vector<Vec3>& positions, double wire_weight,
                      const SpacingLimits& limits) {
  std::vector<Vertex> vertices = base.vertices();
  int next = base.size() + 1;
  for (const Vec3& p : positions) vertices.push_back(Vertex{next++, p, Species::wire, wire_weight});
  return AtomArray(base.name(), std::move(vertices), base.unit_disk_radius(), limits);
}

bool is_independent(const AtomArray& array, VertexSet s) {
  const std::uint64_t bits = s.bits();
  const int n = array.size();
  if (n < 64 && (bits >> n) != 0) throw std::out_of_range("vertex set contains indices beyond the array");
  for (int i = 1; i <= n; ++i)
    if (s.contains(i) && (array.neighbours(i) & bits) != 0) return false;
  return true;
}

}  // namespace graphs
}  // namespace rydanneal
