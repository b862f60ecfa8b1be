#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rydanneal/propagate.hpp"

namespace rydanneal::engine {

double RunResult::mean_density() const {
  if (rydberg_density.empty()) return 0.0;
  return std::accumulate(rydberg_density.begin(), rydberg_density.end(), 0.0) /
         static_cast<double>(rydberg_density.size());
}

std::vector<double> rydberg_density(std::span<const double> distribution, int atoms) {
  if (distribution.size() != (std::size_t{1} << atoms)) throw std::invalid_argument("distribution size is not 2^N");
  std::vector<double> n(static_cast<std::size_t>(atoms), 0.0);
  for (std::size_t b = 0; b < distribution.size(); ++b)
    for (int i = 0; i < atoms; ++i)
      if ((b >> i) & 1u) n[static_cast<std::size_t>(i)] += distribution[b];
  return n;
}

Propagator::Propagator(const graphs::AtomArray& array, const InteractionTable& table,
                       const drive::DriveSchedule& schedule, std::span<const double> decay,
                       const RunOptions& options)
    : schedule_(schedule), cost_(build_cost_terms(array, table, schedule, options.max_atoms)) {
  const int n = cost_.atoms;
  const std::size_t dim = cost_.dimension();
  if (!decay.empty() && decay.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("need one decay rate per atom");
  if (!(options.max_phase_per_step > 0.0)) throw std::invalid_argument("max_phase_per_step must be positive");

  double max_decay = 0.0;
  if (std::any_of(decay.begin(), decay.end(), [](double g) { return g != 0.0; })) {
    for (double g : decay)
      if (!(g >= 0.0)) throw std::invalid_argument("decay rates must be non-negative");
    decay_diag_.assign(dim, 0.0);
    for (std::size_t b = 0; b < dim; ++b) {
      for (int i = 0; i < n; ++i)
        if ((b >> i) & 1u) decay_diag_[b] += 0.25 * decay[static_cast<std::size_t>(i)];
      max_decay = std::max(max_decay, decay_diag_[b]);
    }
  }

  // E_b is affine in the sweep fraction, so its extremes over the schedule
  // sit at f = 0 or f = max f.
  const double f_max = schedule_.max_sweep_fraction();
  double max_e = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    max_e = std::max(max_e, std::abs(cost_.energy(b, schedule_.delta0(), 0.0)));
    max_e = std::max(max_e, std::abs(cost_.energy(b, schedule_.delta0(), f_max)));
  }
  bound_ = max_e + max_decay + 0.5 * n * schedule_.omega0();

  const double edges[4] = {0.0, schedule_.tf1(), schedule_.tf2(), schedule_.tau()};
  for (int s = 0; s < 3; ++s) {
    const double len = edges[s + 1] - edges[s];
    const long steps = std::max(1L, static_cast<long>(std::ceil(bound_ * len / options.max_phase_per_step)));
    segments_.push_back({edges[s], edges[s + 1], steps});
  }
}

long Propagator::total_steps() const {
  long total = 0;
  for (const Segment& s : segments_) total += s.steps;
  return total;
}

State Propagator::initial_state() const {
  State psi(dimension(), Complex{});
  psi[0] = 1.0;
  return psi;
}

void Propagator::derivative(const State& psi, double t, State& out, std::vector<Complex>&) const {
  t = std::min(t, schedule_.tau());
  const double f = schedule_.sweep_fraction(t);
  const double half = 0.5 * schedule_.omega_at(t);
  const double d0 = schedule_.delta0();
  const std::size_t dim = psi.size();
  const Complex* in = psi.data();
  Complex* o = out.data();
  const bool open = !decay_diag_.empty();
  for (std::size_t b = 0; b < dim; ++b) {
    double fr = 0.0, fi = 0.0;
    for (std::size_t m = 1; m < dim; m <<= 1) {
      fr += in[b ^ m].real();
      fi += in[b ^ m].imag();
    }
    const double e = cost_.energy(b, d0, f);
    const double g = open ? decay_diag_[b] : 0.0;
    const double hr = e * in[b].real() + g * in[b].imag() + half * fr;
    const double hi = e * in[b].imag() - g * in[b].real() + half * fi;
    // -i (hr + i hi)
    o[b] = Complex(hi, -hr);
  }
}

void Propagator::rk4_step(State& psi, double t, double dt, std::vector<State>& work) const {
  State& k1 = work[0];
  State& k2 = work[1];
  State& k3 = work[2];
  State& k4 = work[3];
  State& tmp = work[4];
  std::vector<Complex> scratch;
  const std::size_t dim = psi.size();
  const double h2 = 0.5 * dt;

  derivative(psi, t, k1, scratch);
  for (std::size_t b = 0; b < dim; ++b) tmp[b] = psi[b] + h2 * k1[b];
  derivative(tmp, t + h2, k2, scratch);
  for (std::size_t b = 0; b < dim; ++b) tmp[b] = psi[b] + h2 * k2[b];
  derivative(tmp, t + h2, k3, scratch);
  for (std::size_t b = 0; b < dim; ++b) tmp[b] = psi[b] + dt * k3[b];
  derivative(tmp, t + dt, k4, scratch);
  const double s = dt / 6.0;
  for (std::size_t b = 0; b < dim; ++b) psi[b] += s * (k1[b] + 2.0 * (k2[b] + k3[b]) + k4[b]);
}

State Propagator::evolve(State psi) const {
  evolve(psi, [](State&, double) {});
  return psi;
}

namespace {

double norm2(const State& psi) {
  double s = 0.0;
  for (const Complex& a : psi) s += std::norm(a);
  return s;
}

}  // namespace

RunResult propagate_tdse(const graphs::AtomArray& array, const InteractionTable& table,
                         const drive::DriveSchedule& schedule, const RunOptions& options) {
  const Propagator prop(array, table, schedule, {}, options);
  State psi = prop.initial_state();
  double drift = 0.0;
  prop.evolve(psi, [&](State& s, double) { drift = std::max(drift, std::abs(1.0 - norm2(s))); });

  RunResult r;
  r.atoms = prop.atoms();
  r.distribution.resize(psi.size());
  for (std::size_t b = 0; b < psi.size(); ++b) r.distribution[b] = std::norm(psi[b]);
  r.std_error.assign(psi.size(), 0.0);
  r.rydberg_density = rydberg_density(r.distribution, r.atoms);
  r.norm_drift = drift;
  r.steps = prop.total_steps();
  if (!std::isfinite(drift) || drift > options.norm_tolerance) {
    r.ok = false;
    r.failure = "norm drift " + std::to_string(drift) + " exceeds tolerance; step size too large";
  }
  return r;
}

}  // namespace rydanneal::engine
