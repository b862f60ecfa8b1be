#include <bit>
#include <stdexcept>
#include <string>

#include "rydanneal/hamiltonian.hpp"

namespace rydanneal::engine {

namespace {

void check_size(int n, int max_atoms) {
  if (n > max_atoms)
    throw std::invalid_argument("state vector limited to " + std::to_string(max_atoms) + " atoms, got " +
                                std::to_string(n));
}

// Σ_{i<j} V_ij b_i b_j for every bitstring, built incrementally from the
// highest set bit.
std::vector<double> interaction_diagonal(const graphs::AtomArray& array, const InteractionTable& table) {
  const int n = array.size();
  const std::vector<double> v = interaction_matrix(array, table);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> e(dim, 0.0);
  for (std::size_t b = 1; b < dim; ++b) {
    const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(b));
    const std::size_t rest = b & ~(std::size_t{1} << top);
    double add = 0.0;
    for (int j = 0; j < top; ++j)
      if ((rest >> j) & 1u) add += v[static_cast<std::size_t>(top * n + j)];
    e[b] = e[rest] + add;
  }
  return e;
}

}  // namespace

std::vector<double> diagonal_energies(const graphs::AtomArray& array, const InteractionTable& table,
                                      std::span<const double> deltas, int max_atoms) {
  const int n = array.size();
  check_size(n, max_atoms);
  if (deltas.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("need one detuning per atom");
  std::vector<double> e = interaction_diagonal(array, table);
  for (std::size_t b = 0; b < e.size(); ++b)
    for (int i = 0; i < n; ++i)
      if ((b >> i) & 1u) e[b] -= deltas[static_cast<std::size_t>(i)];
  return e;
}

CostTerms build_cost_terms(const graphs::AtomArray& array, const InteractionTable& table,
                           const drive::DriveSchedule& schedule, int max_atoms) {
  const int n = array.size();
  check_size(n, max_atoms);
  if (schedule.atoms() != n) throw std::invalid_argument("schedule and array disagree on the atom count");
  CostTerms c;
  c.atoms = n;
  c.interaction = interaction_diagonal(array, table);
  const std::size_t dim = c.interaction.size();
  c.excitations.assign(dim, 0.0);
  c.sweep_weight.assign(dim, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    for (int i = 0; i < n; ++i) {
      if ((b >> i) & 1u) {
        c.excitations[b] += 1.0;
        c.sweep_weight[b] += schedule.delta_f()[static_cast<std::size_t>(i)] - schedule.delta0();
      }
    }
  }
  return c;
}

namespace {

template <class Diag>
void apply_impl(std::span<const Complex> in, std::span<const Diag> diagonal, double omega, std::span<Complex> out) {
  const std::size_t dim = in.size();
  if (diagonal.size() != dim || out.size() != dim) throw std::invalid_argument("dimension mismatch");
  const double half = 0.5 * omega;
  for (std::size_t b = 0; b < dim; ++b) {
    Complex flip{};
    for (std::size_t m = 1; m < dim; m <<= 1) flip += in[b ^ m];
    out[b] = diagonal[b] * in[b] + half * flip;
  }
}

}  // namespace

void apply_hamiltonian(std::span<const Complex> in, std::span<const double> diagonal, double omega,
                       std::span<Complex> out) {
  apply_impl(in, diagonal, omega, out);
}

void apply_hamiltonian(std::span<const Complex> in, std::span<const Complex> diagonal, double omega,
                       std::span<Complex> out) {
  apply_impl(in, diagonal, omega, out);
}

}  // namespace rydanneal::engine
