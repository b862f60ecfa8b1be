#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rydanneal/drive.hpp"
#include "rydanneal/graphs.hpp"
#include "rydanneal/interaction.hpp"

namespace rydanneal::engine {

using Complex = std::complex<double>;
using State = std::vector<Complex>;

inline constexpr int kDefaultMaxAtoms = 16;

// Cost-Hamiltonian diagonal for fixed detunings:
//   E(b) = -Σ_i Δ_i b_i + Σ_{i<j} V_ij b_i b_j,
// with V over all atom pairs. Throws std::invalid_argument when N exceeds
// max_atoms or the detuning count differs from N.
std::vector<double> diagonal_energies(const graphs::AtomArray& array, const InteractionTable& table,
                                      std::span<const double> deltas, int max_atoms = kDefaultMaxAtoms);

// The diagonal split into time-independent pieces so that, for a schedule
// whose detunings all share one sweep fraction f(t),
//   E(b, t) = interaction[b] - Δ₀·excitations[b] - f(t)·sweep_weight[b].
struct CostTerms {
  int atoms = 0;
  std::vector<double> interaction;
  std::vector<double> excitations;
  std::vector<double> sweep_weight;  // Σ_i (Δ_f(i) - Δ₀) b_i

  std::size_t dimension() const { return interaction.size(); }
  double energy(std::size_t b, double delta0, double fraction) const {
    return interaction[b] - delta0 * excitations[b] - fraction * sweep_weight[b];
  }
};

CostTerms build_cost_terms(const graphs::AtomArray& array, const InteractionTable& table,
                           const drive::DriveSchedule& schedule, int max_atoms = kDefaultMaxAtoms);

// out = H·in with H = diag(diagonal) + (Ω/2) Σ_i σˣ_i, without forming the
// 2^N×2^N matrix. Cost O(N·2^N).
void apply_hamiltonian(std::span<const Complex> in, std::span<const double> diagonal, double omega,
                       std::span<Complex> out);

// Same with a complex diagonal (non-Hermitian effective Hamiltonians).
void apply_hamiltonian(std::span<const Complex> in, std::span<const Complex> diagonal, double omega,
                       std::span<Complex> out);

}  // namespace rydanneal::engine
