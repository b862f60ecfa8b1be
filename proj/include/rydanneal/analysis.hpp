#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rydanneal/graphs.hpp"
#include "rydanneal/propagate.hpp"

namespace rydanneal::analysis {

struct RankedSolution {
  VertexSet set;
  double probability = 0.0;
  graphs::Classification cls = graphs::Classification::independent;
};

// Every configuration, most probable first (ties: ascending bitmask), tagged
// against the exact oracle for the given weights.
std::vector<RankedSolution> rank_solutions(std::span<const double> distribution, const graphs::AtomArray& array,
                                           std::span<const double> weights);

// --- ℤₙ order on a 1D chain ------------------------------------------------

// The n phase-shifted strings with a Rydberg atom on every n-th site.
std::vector<VertexSet> zn_strings(int chain_length, int n);

// Throws std::invalid_argument unless the atoms are collinear, evenly spaced
// and indexed in order along the line.
void require_chain(const graphs::AtomArray& array);

// Probability of a perfect ℤₙ configuration, 2 <= n <= 4.
double zn_order(std::span<const double> distribution, int chain_length, int n);
double zn_order(std::span<const double> distribution, const graphs::AtomArray& chain, int n);

enum class Order { disordered, Z2, Z3, Z4, floating };
std::string_view to_string(Order o);

struct OrderReport {
  double p_z2 = 0.0;
  double p_z3 = 0.0;
  double p_z4 = 0.0;
  Order dominant = Order::disordered;
  double mean_density = 0.0;
  double excitation_plateau = 0.0;  // largest probability of a single excitation number
};

// Dominant order: the ℤₙ with the largest probability if it reaches
// `threshold`; otherwise floating when ⟨n⟩ lies in [1/4, 1/3] and one
// excitation number holds at least `threshold` of the mass; otherwise
// disordered.
OrderReport order_report(std::span<const double> distribution, int chain_length, double threshold = 0.4);

// --- domain walls (ℤ₂) -----------------------------------------------------

// A wall is a maximal run of at least two neighbouring sites in the same
// state. Runs of two sites are type I, three sites type II, longer ones are
// counted separately. A lone ground-state atom at an edge is never a wall on
// its own; it only contributes when it extends an adjacent run.
struct DomainWalls {
  int type_i = 0;
  int type_ii = 0;
  int longer = 0;

  int total() const { return type_i + type_ii + longer; }
};

DomainWalls detect_domain_walls(VertexSet bits, int chain_length);
DomainWalls detect_domain_walls(std::string_view bitstring);  // site 1 first, e.g. "1010010101"

struct DomainWallReport {
  double type_i_prob = 0.0;   // mass of configurations with >= 1 type-I wall
  double type_ii_prob = 0.0;  // ... >= 1 type-II wall
  double any_wall_prob = 0.0;
  double mean_walls = 0.0;
};

DomainWallReport domain_wall_report(std::span<const double> distribution, int chain_length);

// --- susceptibility --------------------------------------------------------

// Natural cubic spline through strictly increasing knots.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;
  double lower() const { return x_.front(); }
  double upper() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

struct SusceptibilityPoint {
  double delta_f = 0.0;
  double density = 0.0;
  double chi = 0.0;
};

struct SusceptibilityCurve {
  std::vector<SusceptibilityPoint> samples;  // on the 10× refined grid
  std::optional<double> critical_detuning;   // argmax χ
  std::string flag;                          // why Δ_c is missing, if it is
};

// ⟨n⟩(Δ_f) through a natural cubic spline, χ = d⟨n⟩/dΔ_f from the spline
// itself, Δ_c = argmax χ on a grid refined tenfold. Needs at least five
// points with strictly monotone Δ_f (throws std::invalid_argument otherwise).
// Δ_c is withheld and flagged when χ vanishes or peaks at a grid end.
SusceptibilityCurve susceptibility_curve(std::vector<std::pair<double, double>> points);

// --- phases ----------------------------------------------------------------

enum class Phase { PM_down, single_excitation, MIS_AFM, multi_excitation, PM_up, floating };
std::string_view to_string(Phase p);

// Dominant configuration family. The family masses are: all ground; exactly
// one Rydberg atom; independent sets of maximum cardinality; N-1 Rydberg
// atoms; all Rydberg. The heaviest family wins if it holds at least
// `threshold`, otherwise the phase is floating.
Phase classify_phase(std::span<const double> distribution, const graphs::AtomArray& array, double threshold = 0.4);

struct PhasePoint {
  double x = 0.0;  // e.g. R_b/λ
  double y = 0.0;  // e.g. Δ_f/Ω₀
  Phase phase = Phase::floating;
};

// For every x column (y ascending), the midpoint between the last `below`
// point and the first `above` point directly following it. Columns without
// such a transition are skipped.
std::vector<std::pair<double, double>> extract_boundary(std::vector<PhasePoint> grid, Phase below, Phase above);

struct BoundaryFit {
  double xi = 0.0;
  double rms_log_residual = 0.0;
  int points = 0;
};

// Fits y = ¼·c6·exp(-ξ·x) with the prefactor held fixed; least squares on
// ln y (closed form). `c6` is the bare number (e.g. 2550 for Rb 81S in
// GHz·μm⁶). Needs at least four points with positive ordinates.
BoundaryFit fit_phase_boundary(std::span<const std::pair<double, double>> points, double c6 = 2550.0);

struct FloatingScanPoint {
  double rb_over_a = 0.0;
  double delta_f_over_omega0 = 0.0;
  OrderReport report;
};

struct FloatingWindow {
  std::optional<double> lower;  // smallest R_b/a flagged floating
  std::optional<double> upper;
  std::vector<FloatingScanPoint> floating_points;
  std::vector<std::string> warnings;
};

// Collects the scan points classified as floating. Points outside
// 1 <= R_b/a <= 3.2 produce a warning but are still reported.
FloatingWindow floating_phase_scan(const std::vector<FloatingScanPoint>& scan);

}  // namespace rydanneal::analysis
