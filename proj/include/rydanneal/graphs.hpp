#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rydanneal/vertex_set.hpp"

namespace rydanneal::graphs {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(Vec3, Vec3) = default;
};

inline double distance(Vec3 a, Vec3 b) {
  const Vec3 d = a - b;
  return std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
}

// Graph atoms encode the problem; wire atoms are the auxiliary second species
// that mediates interactions between distant graph vertices.
enum class Species : std::uint8_t { graph, wire };

std::string_view to_string(Species s);
Species species_from_string(std::string_view name);

struct Vertex {
  int index = 0;          // 1-based
  Vec3 position;          // μm
  Species species = Species::graph;
  double weight = 1.0;    // final detuning Δ_f(i), rad/μs
};

// Minimum allowed separation per species pair (the Leroy radius, μm).
struct SpacingLimits {
  double graph_graph = 2.0;
  double graph_wire = 2.0;
  double wire_wire = 2.0;

  double operator()(Species a, Species b) const;
};

using Edge = std::pair<int, int>;  // (i, j), 1-based, i < j

// Atoms in space plus the unit-disk graph derived from their geometry. Edges
// are recomputed from positions on every construction and are never stored
// independently of them.
class AtomArray {
 public:
  AtomArray() = default;
  // Validates indices, spacing and radius; throws std::invalid_argument or
  // SpacingError.
  AtomArray(std::string name, std::vector<Vertex> vertices, double unit_disk_radius,
            const SpacingLimits& limits = {});

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int index) const { return vertices_.at(static_cast<std::size_t>(index - 1)); }
  double unit_disk_radius() const { return radius_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  // Bitmask of the neighbours of vertex i.
  std::uint64_t neighbours(int i) const { return adjacency_.at(static_cast<std::size_t>(i - 1)); }

  std::vector<double> weights() const;
  std::vector<Vec3> positions() const;

  // Same atoms with new positions (edges are re-derived).
  AtomArray with_positions(const std::vector<Vec3>& positions, const SpacingLimits& limits = {}) const;
  AtomArray with_weights(std::span<const double> weights) const;
  AtomArray with_uniform_weight(double weight) const;
  AtomArray with_species_weight(Species species, double weight) const;

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  double radius_ = 0.0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

inline constexpr int kMaxArraySize = 64;

// Closed-disk unit-disk graph: pairs at distance <= radius are edges. All
// vertices get graph species and unit weight.
AtomArray build_unit_disk_graph(const std::vector<Vec3>& positions, double radius,
                                const SpacingLimits& limits = {});

enum class LibraryGraph { P4, Fan3, Pan3, Pan5_W1, Pan7_W2, Tower, J14 };

std::string_view to_string(LibraryGraph g);
LibraryGraph library_graph_from_string(std::string_view name);  // throws std::invalid_argument
std::vector<LibraryGraph> all_library_graphs();

// Unit-disk radius used for a library graph, as a multiple of λ.
double library_radius_factor(LibraryGraph g);

// Vertex coordinates of the named graph as functions of λ (μm). J14 uses
// x0 = y0 = 0, η0 = -0.183368, q0 = 1. Wire atoms of Pan5_W1 / Pan7_W2 carry
// wire species. Every vertex has unit weight.
AtomArray library_graph(LibraryGraph g, double lambda, const SpacingLimits& limits = {});

// Evenly spaced atoms along x, vertex 1 at the origin; unit-disk radius equals
// the spacing.
AtomArray linear_chain(int atoms, double spacing, const SpacingLimits& limits = {});

// Wire atom positions of the Pan5_W1 / Pan7_W2 layouts (the atoms appended to
// Pan3), for use with attach_wire.
std::vector<Vec3> wire_positions(LibraryGraph g, double lambda);

// Appends wire-species atoms with a uniform weight; indices continue after
// the existing vertices. Throws SpacingError on a spacing violation.
AtomArray attach_wire(const AtomArray& base, const std::vector<Vec3>& positions, double wire_weight,
                      const SpacingLimits& limits = {});

bool is_independent(const AtomArray& array, VertexSet s);

inline constexpr int kOracleMaxVertices = 24;

struct MwisResult {
  std::vector<VertexSet> sets;  // ascending bitmask
  double total_weight = 0.0;

  bool contains(VertexSet s) const;
};

// All maximum-weight independent sets by exhaustive enumeration. Weights
// within a relative 1e-9 of the maximum count as ties. Throws
// std::invalid_argument above kOracleMaxVertices or on a size mismatch.
MwisResult brute_force_mwis(const AtomArray& array, std::span<const double> weights);
MwisResult brute_force_mis(const AtomArray& array);

struct WeightedSet {
  VertexSet set;
  double weight = 0.0;
};

// Every independent set (including the empty one), heaviest first, ties by
// ascending bitmask.
std::vector<WeightedSet> enumerate_independent_sets(const AtomArray& array, std::span<const double> weights);

enum class Classification { mwis, independent, frustrated };

std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view name);

Classification classify_configuration(const AtomArray& array, VertexSet s, std::span<const double> weights);
// Reuses a precomputed oracle answer.
Classification classify_configuration(const AtomArray& array, VertexSet s, const MwisResult& oracle);

}  // namespace rydanneal::graphs
