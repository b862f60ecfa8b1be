#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rydanneal/disorder.hpp"
#include "rydanneal/errors.hpp"
#include "rydanneal/seeding.hpp"

namespace rydanneal::engine {

void DisorderModel::validate() const {
  for (double s : {sigma_x, sigma_y, sigma_z})
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("disorder widths must be non-negative");
  if (samples < 1) throw std::invalid_argument("disorder needs at least one sample");
}

namespace {

double draw(std::mt19937_64& rng, double sigma, DisorderDistribution dist) {
  if (sigma == 0.0) return 0.0;
  if (dist == DisorderDistribution::gaussian) return std::normal_distribution<double>(0.0, sigma)(rng);
  return std::uniform_real_distribution<double>(-sigma, sigma)(rng);
}

}  // namespace

std::vector<graphs::AtomArray> sample_disorder(const graphs::AtomArray& array, const DisorderModel& model,
                                               const graphs::SpacingLimits& limits) {
  model.validate();
  std::vector<graphs::AtomArray> out;
  out.reserve(static_cast<std::size_t>(model.samples));
  const std::vector<graphs::Vec3> nominal = array.positions();
  for (int k = 0; k < model.samples; ++k) {
    std::mt19937_64 rng(derive_seed(model.seed, "disorder", static_cast<std::uint64_t>(k)));
    bool placed = false;
    for (int attempt = 0; attempt <= kMaxDisorderRedraws && !placed; ++attempt) {
      std::vector<graphs::Vec3> moved = nominal;
      for (graphs::Vec3& p : moved) {
        p.x += draw(rng, model.sigma_x, model.distribution);
        p.y += draw(rng, model.sigma_y, model.distribution);
        p.z += draw(rng, model.sigma_z, model.distribution);
      }
      try {
        out.push_back(array.with_positions(moved, limits));
        placed = true;
      } catch (const std::invalid_argument&) {
        // spacing violation or coincident atoms: redraw
      }
    }
    if (!placed)
      throw EngineError("disorder sample " + std::to_string(k) + " violated the atom spacing limit after " +
                        std::to_string(kMaxDisorderRedraws) + " redraws");
  }
  return out;
}

RunResult average_samples(const std::vector<RunResult>& runs) {
  if (runs.empty()) throw std::invalid_argument("nothing to average");
  const std::size_t dim = runs.front().distribution.size();
  RunResult r;
  r.atoms = runs.front().atoms;
  r.samples = static_cast<int>(runs.size());
  r.trajectories = runs.front().trajectories;
  r.distribution.assign(dim, 0.0);
  r.std_error.assign(dim, 0.0);
  for (const RunResult& run : runs) {
    if (run.distribution.size() != dim) throw std::invalid_argument("runs have different sizes");
    for (std::size_t b = 0; b < dim; ++b) r.distribution[b] += run.distribution[b];
    r.norm_drift = std::max(r.norm_drift, run.norm_drift);
    r.steps += run.steps;
    r.jumps += run.jumps;
    if (!run.ok && r.ok) {
      r.ok = false;
      r.failure = run.failure;
    }
  }
  const double n = static_cast<double>(runs.size());
  for (double& p : r.distribution) p /= n;
  if (runs.size() > 1) {
    for (const RunResult& run : runs)
      for (std::size_t b = 0; b < dim; ++b) {
        const double d = run.distribution[b] - r.distribution[b];
        r.std_error[b] += d * d;
      }
    for (double& s : r.std_error) s = std::sqrt(s / (n - 1.0));
  } else {
    r.std_error = runs.front().std_error;
  }
  r.rydberg_density = rydberg_density(r.distribution, r.atoms);
  return r;
}

}  // namespace rydanneal::engine
