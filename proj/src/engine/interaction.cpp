#include <cmath>
#include <stdexcept>
#include <string>

#include "rydanneal/interaction.hpp"
#include "rydanneal/units.hpp"

namespace rydanneal::engine {

using graphs::Species;

InteractionTable::InteractionTable(PairCoefficients graph_graph, PairCoefficients graph_wire,
                                   PairCoefficients wire_wire, SpeciesProperties graph, SpeciesProperties wire)
    : graph_graph_(graph_graph), graph_wire_(graph_wire), wire_wire_(wire_wire), graph_(std::move(graph)),
      wire_(std::move(wire)) {
  validate();
}

InteractionTable InteractionTable::defaults() {
  using units::angular_from_ghz;
  // Rb 81S1/2 pair: fitted coefficients and radii of the pair-potential curve.
  const PairCoefficients rb_rb{angular_from_ghz(2550.0), angular_from_ghz(54.0), 3.7, 2.0};
  // Rb-Cs and Cs-Cs: ARC perturbative C6 rescaled onto the Rb-Rb fit; the C3
  // branch is chosen continuous at R_vdW = 4 um.
  const double c6_rb_cs = angular_from_ghz(3061.0);
  const double c6_cs_cs = angular_from_ghz(1954.0);
  const PairCoefficients rb_cs{c6_rb_cs, c6_rb_cs / 64.0, 4.0, 2.0};
  const PairCoefficients cs_cs{c6_cs_cs, c6_cs_cs / 64.0, 4.0, 2.0};
  return InteractionTable(rb_rb, rb_cs, cs_cs, {"Rb87", 0.118}, {"Cs133", 0.155});
}

const PairCoefficients& InteractionTable::pair(Species a, Species b) const {
  if (a == Species::graph && b == Species::graph) return graph_graph_;
  if (a == Species::wire && b == Species::wire) return wire_wire_;
  return graph_wire_;
}

const SpeciesProperties& InteractionTable::species(Species s) const {
  return s == Species::graph ? graph_ : wire_;
}

graphs::SpacingLimits InteractionTable::spacing_limits() const {
  return {graph_graph_.r_lr, graph_wire_.r_lr, wire_wire_.r_lr};
}

void InteractionTable::validate() const {
  auto check = [](const PairCoefficients& p, const char* name) {
    if (!(p.c6 > 0.0 && p.c3 > 0.0 && p.r_vdw > 0.0 && p.r_lr > 0.0))
      throw std::invalid_argument(std::string(name) + ": all interaction coefficients must be positive");
    if (!(p.r_lr < p.r_vdw)) throw std::invalid_argument(std::string(name) + ": need R_LR < R_vdW");
  };
  check(graph_graph_, "graph_graph");
  check(graph_wire_, "graph_wire");
  check(wire_wire_, "wire_wire");
  if (!(graph_.intermediate_lifetime > 0.0) || !(wire_.intermediate_lifetime > 0.0))
    throw std::invalid_argument("intermediate-state lifetimes must be positive");
}

double pair_interaction(const InteractionTable& table, Species a, Species b, double r) {
  const PairCoefficients& p = table.pair(a, b);
  if (!(r > p.r_lr))
    throw std::domain_error("interatomic distance " + std::to_string(r) + " um is not above the Leroy radius " +
                            std::to_string(p.r_lr) + " um");
  if (r >= p.r_vdw) {
    const double r3 = r * r * r;
    return p.c6 / (r3 * r3);
  }
  return p.c3 / (r * r * r);
}

std::vector<double> interaction_matrix(const graphs::AtomArray& array, const InteractionTable& table) {
  const int n = array.size();
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = array.vertices()[static_cast<std::size_t>(i)];
      const auto& b = array.vertices()[static_cast<std::size_t>(j)];
      const double e = pair_interaction(table, a.species, b.species, graphs::distance(a.position, b.position));
      v[static_cast<std::size_t>(i * n + j)] = e;
      v[static_cast<std::size_t>(j * n + i)] = e;
    }
  }
  return v;
}

std::string_view to_string(GammaMode m) {
  switch (m) {
    case GammaMode::off: return "off";
    case GammaMode::bare: return "bare";
    case GammaMode::scaled: return "scaled";
  }
  return "?";
}

GammaMode gamma_mode_from_string(std::string_view name) {
  if (name == "off") return GammaMode::off;
  if (name == "bare") return GammaMode::bare;
  if (name == "scaled") return GammaMode::scaled;
  throw std::invalid_argument("unknown gamma mode '" + std::string(name) + "' (expected off, bare or scaled)");
}

std::vector<double> decay_rates(const graphs::AtomArray& array, const InteractionTable& table, GammaMode mode,
                                double population_factor) {
  std::vector<double> g(static_cast<std::size_t>(array.size()), 0.0);
  if (mode == GammaMode::off) return g;
  if (mode == GammaMode::scaled && !(population_factor >= 0.0))
    throw std::invalid_argument("population factor must be non-negative");
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] = table.gamma_m(array.vertices()[k].species);
    if (mode == GammaMode::scaled) g[k] *= population_factor;
  }
  return g;
}

}  // namespace rydanneal::engine
