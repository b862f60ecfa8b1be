#include <array>
#include <cmath>
#include <stdexcept>

#include "rydanneal/graphs.hpp"

namespace rydanneal::graphs {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt3 = 1.7320508075688772935;

// Parameters of the J14 layout: two stacked triangles capped by apex atoms.
constexpr double kJ14Eta = -0.183368;
constexpr double kJ14Q = 1.0;

double wire_k() { return std::sqrt(1.0 + 2.0 * kSqrt2); }

std::vector<Vec3> pan3_positions(double l) {
  return {{-l / kSqrt2, l / kSqrt2, 0.0}, {-l / kSqrt2, -l / kSqrt2, 0.0}, {0.0, 0.0, 0.0}, {l, 0.0, 0.0}};
}

std::vector<Vec3> base_positions(LibraryGraph g, double l) {
  switch (g) {
    case LibraryGraph::P4:
      return {{-l, 0.0, 0.0}, {-l / 2.0, kSqrt3 / 2.0 * l, 0.0}, {l / 2.0, kSqrt3 / 2.0 * l, 0.0}, {l, 0.0, 0.0}};
    case LibraryGraph::Fan3:
      return {{0.0, 0.0, 0.0},
              {-l, 0.0, 0.0},
              {-l / 2.0, kSqrt3 / 2.0 * l, 0.0},
              {l / 2.0, kSqrt3 / 2.0 * l, 0.0},
              {l, 0.0, 0.0}};
    case LibraryGraph::Pan3:
    case LibraryGraph::Pan5_W1:
    case LibraryGraph::Pan7_W2:
      return pan3_positions(l);
    case LibraryGraph::Tower:
      return {{0.0, 0.0, 0.0},
              {0.0, -l, 0.0},
              {-l / kSqrt2, -l / kSqrt2 - l, 0.0},
              {l / kSqrt2, -l / kSqrt2 - l, 0.0},
              {2.0 * l / kSqrt2, -2.0 * l / kSqrt2 - l, 0.0},
              {0.0, -l * (1.0 + kSqrt2), 0.0},
              {-2.0 * l / kSqrt2, -2.0 * l / kSqrt2 - l, 0.0}};
    case LibraryGraph::J14: {
      const double e = kJ14Eta;
      const double q = kJ14Q;
      const double r = l / kSqrt3;
      const double s = l / (2.0 * kSqrt3);
      return {{0.0, 0.0, e * l},
              {0.0, r, -l},
              {-l / 2.0, -s, -l},
              {l / 2.0, -s, -l},
              {l / 2.0, -s, -2.0 * l * q},
              {0.0, r, -2.0 * l * q},
              {-l / 2.0, -s, -2.0 * l * q},
              {0.0, 0.0, -l * (e + 2.0 * q + 1.0)}};
    }
  }
  throw std::invalid_argument("unknown library graph");
}

}  // namespace

std::string_view to_string(LibraryGraph g) {
  switch (g) {
    case LibraryGraph::P4: return "P4";
    case LibraryGraph::Fan3: return "Fan3";
    case LibraryGraph::Pan3: return "Pan3";
    case LibraryGraph::Pan5_W1: return "Pan5_W1";
    case LibraryGraph::Pan7_W2: return "Pan7_W2";
    case LibraryGraph::Tower: return "Tower";
    case LibraryGraph::J14: return "J14";
  }
  return "?";
}

LibraryGraph library_graph_from_string(std::string_view name) {
  for (LibraryGraph g : all_library_graphs())
    if (to_string(g) == name) return g;
  throw std::invalid_argument("unknown library graph '" + std::string(name) +
                              "' (expected P4, Fan3, Pan3, Pan5_W1, Pan7_W2, Tower or J14)");
}

std::vector<LibraryGraph> all_library_graphs() {
  return {LibraryGraph::P4,      LibraryGraph::Fan3,  LibraryGraph::Pan3, LibraryGraph::Pan5_W1,
          LibraryGraph::Pan7_W2, LibraryGraph::Tower, LibraryGraph::J14};
}

// P4 and Fan3 have all edges at exactly λ. The other layouts contain √2λ
// and slightly-over-λ edges (the J14 triangle-to-apex bonds), so their disk
// is widened to 1.5λ, which still separates edges from non-edges cleanly.
double library_radius_factor(LibraryGraph g) {
  switch (g) {
    case LibraryGraph::P4:
    case LibraryGraph::Fan3:
      return 1.0;
    default:
      return 1.5;
  }
}

std::vector<Vec3> wire_positions(LibraryGraph g, double l) {
  if (!(l > 0.0)) throw std::invalid_argument("lambda must be positive");
  const double k = wire_k();
  switch (g) {
    case LibraryGraph::Pan5_W1: {
      const double x = -l / kSqrt2 - l / 2.0 * k;
      return {{x, l / 2.0, 0.0}, {x, -l / 2.0, 0.0}};
    }
    case LibraryGraph::Pan7_W2: {
      const double x1 = -l / kSqrt2 - l;
      const double x2 = -0.5 * (2.0 + kSqrt2 + k) * l;
      return {{x1, l / kSqrt2, 0.0}, {x1, -l / kSqrt2, 0.0}, {x2, l / 2.0, 0.0}, {x2, -l / 2.0, 0.0}};
    }
    default:
      throw std::invalid_argument("graph " + std::string(to_string(g)) + " has no wire");
  }
}

AtomArray library_graph(LibraryGraph g, double lambda, const SpacingLimits& limits) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
  std::vector<Vertex> vertices;
  int index = 1;
  for (const Vec3& p : base_positions(g, lambda)) vertices.push_back(Vertex{index++, p, Species::graph, 1.0});
  if (g == LibraryGraph::Pan5_W1 || g == LibraryGraph::Pan7_W2) {
    for (const Vec3& p : wire_positions(g, lambda)) vertices.push_back(Vertex{index++, p, Species::wire, 1.0});
  }
  return AtomArray(std::string(to_string(g)), std::move(vertices), library_radius_factor(g) * lambda, limits);
}

AtomArray linear_chain(int atoms, double spacing, const SpacingLimits& limits) {
  if (atoms < 1 || atoms > kMaxArraySize) throw std::invalid_argument("chain length must be in 1..64");
  if (!(spacing > 0.0)) throw std::invalid_argument("chain spacing must be positive");
  std::vector<Vertex> vertices;
  for (int i = 0; i < atoms; ++i) vertices.push_back(Vertex{i + 1, {i * spacing, 0.0, 0.0}, Species::graph, 1.0});
  return AtomArray("chain" + std::to_string(atoms), std::move(vertices), spacing, limits);
}

}  // namespace rydanneal::graphs
