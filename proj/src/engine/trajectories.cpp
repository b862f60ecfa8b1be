#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "rydanneal/propagate.hpp"
#include "rydanneal/seeding.hpp"

namespace rydanneal::engine {

namespace {

constexpr int kBlockSize = 16;

struct BlockSums {
  std::vector<double> sum;
  std::vector<double> sum_sq;
  int jumps = 0;
  bool finite = true;
};

double uniform01(std::mt19937_64& rng) { return std::generate_canonical<double, 53>(rng); }

// One trajectory; adds its normalised final distribution into `acc`.
void run_trajectory(const Propagator& prop, std::span<const double> decay, std::uint64_t seed, BlockSums& acc) {
  std::mt19937_64 rng(seed);
  const int n = prop.atoms();
  State psi = prop.initial_state();
  double threshold = uniform01(rng);
  std::vector<double> channel(static_cast<std::size_t>(n));

  prop.evolve(psi, [&](State& s, double) {
    double p = 0.0;
    for (const Complex& a : s) p += std::norm(a);
    if (p >= threshold) return;

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double occ = 0.0;
      for (std::size_t b = 0; b < s.size(); ++b)
        if ((b >> i) & 1u) occ += std::norm(s[b]);
      channel[static_cast<std::size_t>(i)] = decay[static_cast<std::size_t>(i)] * occ;
      total += channel[static_cast<std::size_t>(i)];
    }
    if (total > 0.0) {
      double pick = uniform01(rng) * total;
      int which = n - 1;
      for (int i = 0; i < n; ++i) {
        pick -= channel[static_cast<std::size_t>(i)];
        if (pick < 0.0) {
          which = i;
          break;
        }
      }
      double kept = 0.0;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (((b >> which) & 1u) == 0) s[b] = 0.0;
        else kept += std::norm(s[b]);
      }
      const double scale = 1.0 / std::sqrt(kept);
      for (Complex& a : s) a *= scale;
      ++acc.jumps;
    }
    threshold = uniform01(rng);
  });

  double norm = 0.0;
  for (const Complex& a : psi) norm += std::norm(a);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    acc.finite = false;
    return;
  }
  for (std::size_t b = 0; b < psi.size(); ++b) {
    const double p = std::norm(psi[b]) / norm;
    acc.sum[b] += p;
    acc.sum_sq[b] += p * p;
  }
}

}  // namespace

RunResult propagate_trajectories(const graphs::AtomArray& array, const InteractionTable& table,
                                 const drive::DriveSchedule& schedule, std::span<const double> decay, int n_traj,
                                 std::uint64_t seed, const RunOptions& options) {
  if (n_traj < 1) throw std::invalid_argument("need at least one trajectory");
  std::vector<double> rates(decay.begin(), decay.end());
  if (rates.empty()) rates.assign(static_cast<std::size_t>(array.size()), 0.0);
  const Propagator prop(array, table, schedule, rates, options);
  const std::size_t dim = prop.dimension();

  const int blocks = (n_traj + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> sums(static_cast<std::size_t>(blocks));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int blk = next++; blk < blocks; blk = next++) {
      BlockSums& acc = sums[static_cast<std::size_t>(blk)];
      acc.sum.assign(dim, 0.0);
      acc.sum_sq.assign(dim, 0.0);
      const int first = blk * kBlockSize;
      const int last = std::min(n_traj, first + kBlockSize);
      for (int k = first; k < last; ++k)
        run_trajectory(prop, rates, derive_seed(seed, "traj", static_cast<std::uint64_t>(k)), acc);
    }
  };

  int threads = options.threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : options.threads;
  threads = std::clamp(threads, 1, blocks);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  RunResult r;
  r.atoms = prop.atoms();
  r.trajectories = n_traj;
  r.steps = prop.total_steps();
  std::vector<double> sum(dim, 0.0), sum_sq(dim, 0.0);
  for (const BlockSums& acc : sums) {
    for (std::size_t b = 0; b < dim; ++b) {
      sum[b] += acc.sum[b];
      sum_sq[b] += acc.sum_sq[b];
    }
    r.jumps += acc.jumps;
    if (!acc.finite) {
      r.ok = false;
      r.failure = "a trajectory lost its norm";
    }
  }
  const double nt = static_cast<double>(n_traj);
  r.distribution.resize(dim);
  r.std_error.resize(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const double mean = sum[b] / nt;
    r.distribution[b] = mean;
    const double var = n_traj > 1 ? std::max(0.0, (sum_sq[b] - nt * mean * mean) / (nt - 1.0)) : 0.0;
    r.std_error[b] = std::sqrt(var / nt);
  }
  r.rydberg_density = rydberg_density(r.distribution, r.atoms);
  return r;
}

}  // namespace rydanneal::engine
