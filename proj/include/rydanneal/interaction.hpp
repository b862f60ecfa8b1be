#pragma once

#include <string>
#include <vector>

#include "rydanneal/graphs.hpp"

namespace rydanneal::engine {

// Fitted pair-potential coefficients for one species pair. C6 in
// rad/μs·μm⁶, C3 in rad/μs·μm³, radii in μm.
struct PairCoefficients {
  double c6 = 0.0;
  double c3 = 0.0;
  double r_vdw = 0.0;  // below: C3/R³, at or above: C6/R⁶
  double r_lr = 0.0;   // Leroy radius, hard lower bound on R
};

struct SpeciesProperties {
  std::string element;
  double intermediate_lifetime = 0.0;  // μs; γ_m = 1/lifetime
};

class InteractionTable {
 public:
  InteractionTable() = default;
  InteractionTable(PairCoefficients graph_graph, PairCoefficients graph_wire, PairCoefficients wire_wire,
                   SpeciesProperties graph, SpeciesProperties wire);

  // ⁸⁷Rb graph atoms and Cs wire atoms, both in 81S1/2.
  static InteractionTable defaults();

  const PairCoefficients& pair(graphs::Species a, graphs::Species b) const;
  const SpeciesProperties& species(graphs::Species s) const;
  double gamma_m(graphs::Species s) const { return 1.0 / species(s).intermediate_lifetime; }
  graphs::SpacingLimits spacing_limits() const;

  // Throws std::invalid_argument unless every coefficient is positive and
  // R_LR < R_vdW for each pair.
  void validate() const;

 private:
  PairCoefficients graph_graph_;
  PairCoefficients graph_wire_;
  PairCoefficients wire_wire_;
  SpeciesProperties graph_;
  SpeciesProperties wire_;
};

// C3/R³ for R_LR < R < R_vdW and C6/R⁶ for R >= R_vdW. The two fitted
// branches do not meet exactly at R_vdW (Rb 81S: about 7 %); no smoothing is
// applied. Throws std::domain_error for R <= R_LR.
double pair_interaction(const InteractionTable& table, graphs::Species a, graphs::Species b, double r);

// Symmetric N×N matrix (row-major, zero diagonal) of pairwise interactions
// over every pair of atoms, not only unit-disk edges.
std::vector<double> interaction_matrix(const graphs::AtomArray& array, const InteractionTable& table);

// How the intermediate-state decay enters the jump operators
// L_i = sqrt(γ_i/2) n̂_i.
enum class GammaMode {
  off,     // γ = 0
  bare,    // γ = 1/τ_m
  scaled,  // γ = (1/τ_m)·(Ω₁₀₁₃/2Δ_m)², the intermediate-state population
};

std::string_view to_string(GammaMode m);
GammaMode gamma_mode_from_string(std::string_view name);

// Per-atom γ_i (1/μs). `population_factor` is (Ω₁₀₁₃/2Δ_m)² and only used in
// scaled mode.
std::vector<double> decay_rates(const graphs::AtomArray& array, const InteractionTable& table, GammaMode mode,
                                double population_factor);

}  // namespace rydanneal::engine
