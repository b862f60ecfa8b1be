#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rydanneal/graphs.hpp"
#include "rydanneal/propagate.hpp"

namespace rydanneal::engine {

enum class DisorderDistribution { gaussian, uniform };

// Independent per-axis displacement of every atom. Gaussian draws use σ as
// the standard deviation; uniform draws are flat on [-σ, σ].
struct DisorderModel {
  double sigma_x = 0.0;  // μm
  double sigma_y = 0.0;
  double sigma_z = 0.0;
  int samples = 1;
  std::uint64_t seed = 0;
  DisorderDistribution distribution = DisorderDistribution::gaussian;

  void validate() const;  // σ >= 0, samples >= 1
};

inline constexpr int kMaxDisorderRedraws = 100;

// Sample k uses derive_seed(model.seed, "disorder", k). A draw that puts two
// atoms within the Leroy radius is redrawn; after kMaxDisorderRedraws
// failures an EngineError is thrown.
std::vector<graphs::AtomArray> sample_disorder(const graphs::AtomArray& array, const DisorderModel& model,
                                               const graphs::SpacingLimits& limits = {});

// Sample-mean distribution; std_error holds the spread (standard deviation
// over samples) of each bitstring probability.
RunResult average_samples(const std::vector<RunResult>& runs);

}  // namespace rydanneal::engine
