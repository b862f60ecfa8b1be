#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rydanneal/drive.hpp"
#include "rydanneal/graphs.hpp"
#include "rydanneal/hamiltonian.hpp"
#include "rydanneal/interaction.hpp"

namespace rydanneal::engine {

struct RunOptions {
  // Largest allowed ‖H‖·dt (rad) with ‖H‖ bounded by max_b |E_b(t)| + N·Ω₀/2.
  double max_phase_per_step = 0.025;
  int max_atoms = kDefaultMaxAtoms;
  // Closed-system runs whose norm drifts further than this are failed.
  double norm_tolerance = 1.0e-6;
  // Worker threads for trajectory batches (0: hardware concurrency).
  int threads = 1;
};

struct RunResult {
  int atoms = 0;
  std::vector<double> distribution;  // 2^N probabilities, vertex 1 = LSB
  std::vector<double> std_error;     // per bitstring; zero for a single deterministic run
  std::vector<double> rydberg_density;
  double norm_drift = 0.0;  // max |1 - ‖ψ‖²| seen (closed-system runs)
  int trajectories = 0;     // 0 for a pure Schrödinger run
  int samples = 1;          // disorder realisations averaged
  long steps = 0;
  int jumps = 0;
  bool ok = true;
  std::string failure;

  double probability(VertexSet s) const { return distribution.at(s.bits()); }
  double mean_density() const;
};

// Per-atom ⟨n_i⟩ of a distribution over 2^atoms bitstrings.
std::vector<double> rydberg_density(std::span<const double> distribution, int atoms);

// Integrates i dψ/dt = H(t)ψ from |g…g⟩ at t = 0 to τ with classic RK4.
// Step sizes are fixed per drive segment ([0, t_f1], [t_f1, t_f2], [t_f2, τ]).
class Propagator {
 public:
  // `decay` holds per-atom γ_i (1/μs); empty or all-zero means closed system.
  // Throws std::invalid_argument for N > max_atoms or mismatched sizes.
  Propagator(const graphs::AtomArray& array, const InteractionTable& table, const drive::DriveSchedule& schedule,
             std::span<const double> decay, const RunOptions& options);

  int atoms() const { return cost_.atoms; }
  std::size_t dimension() const { return cost_.dimension(); }
  double hamiltonian_bound() const { return bound_; }
  long total_steps() const;

  State initial_state() const;

  // Runs the full schedule. `after_step(psi, t)` is invoked after every step
  // and may rescale or replace psi (quantum jumps).
  template <class AfterStep>
  void evolve(State& psi, AfterStep&& after_step) const;

  // ψ(τ) under the closed-system (or effective non-Hermitian) Hamiltonian.
  State evolve(State psi) const;

 private:
  struct Segment {
    double start;
    double end;
    long steps;
  };

  void rk4_step(State& psi, double t, double dt, std::vector<State>& work) const;
  void derivative(const State& psi, double t, State& out, std::vector<Complex>& diag) const;

  drive::DriveSchedule schedule_;
  CostTerms cost_;
  std::vector<double> decay_diag_;  // Σ_i γ_i/4 b_i; empty when closed
  double bound_ = 0.0;
  std::vector<Segment> segments_;
};

template <class AfterStep>
void Propagator::evolve(State& psi, AfterStep&& after_step) const {
  std::vector<State> work(5, State(dimension()));
  for (const Segment& seg : segments_) {
    const double dt = (seg.end - seg.start) / static_cast<double>(seg.steps);
    for (long k = 0; k < seg.steps; ++k) {
      const double t = seg.start + static_cast<double>(k) * dt;
      rk4_step(psi, t, dt, work);
      after_step(psi, k + 1 == seg.steps ? seg.end : t + dt);
    }
  }
}

// Closed-system annealing run. A run whose norm drift exceeds
// options.norm_tolerance comes back with ok = false.
RunResult propagate_tdse(const graphs::AtomArray& array, const InteractionTable& table,
                         const drive::DriveSchedule& schedule, const RunOptions& options = {});

// Monte Carlo wave-function unravelling of the Lindblad equation with
// L_i = sqrt(γ_i/2) n̂_i. Trajectory k draws from derive_seed(seed, "traj", k);
// trajectories are accumulated in fixed-size blocks merged in block order, so
// the result does not depend on the thread count.
RunResult propagate_trajectories(const graphs::AtomArray& array, const InteractionTable& table,
                                 const drive::DriveSchedule& schedule, std::span<const double> decay,
                                 int n_traj, std::uint64_t seed, const RunOptions& options = {});

}  // namespace rydanneal::engine
