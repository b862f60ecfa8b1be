#include <algorithm>
#include <cmath>
#include <numeric>

#include "rydanneal/verify.hpp"

namespace rydanneal::cli {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport verify_result(const LoadedResult& r, double tolerance) {
  VerifyReport report;
  const graphs::AtomArray& array = r.graph.array;
  const int n = array.size();

  report.checks.push_back({"status", r.ok, r.ok ? "run reported success" : "run was flagged as failed"});

  const double total = std::accumulate(r.distribution.begin(), r.distribution.end(), 0.0);
  report.checks.push_back({"normalization", std::abs(total - 1.0) <= tolerance,
                           "sum of probabilities = " + std::to_string(total)});

  const auto low = std::min_element(r.distribution.begin(), r.distribution.end());
  report.checks.push_back({"non_negative", *low >= 0.0, "smallest probability = " + std::to_string(*low)});

  const graphs::MwisResult oracle = graphs::brute_force_mwis(array, array.weights());
  int mismatches = 0;
  std::string first_bad;
  for (std::size_t b = 0; b < r.distribution.size(); ++b) {
    const auto fresh = graphs::to_string(graphs::classify_configuration(array, VertexSet(b), oracle));
    if (r.classes[b] != fresh) {
      if (mismatches++ == 0) first_bad = VertexSet(b).to_string() + " stored '" + r.classes[b] + "', oracle '" + std::string(fresh) + "'";
    }
  }
  report.checks.push_back({"classification", mismatches == 0,
                           mismatches == 0 ? "all configurations match the oracle"
                                           : std::to_string(mismatches) + " mismatches, first " + first_bad});

  const auto top = std::max_element(r.distribution.begin(), r.distribution.end());
  const VertexSet argmax(static_cast<std::uint64_t>(top - r.distribution.begin()));
  std::string sets;
  for (VertexSet s : oracle.sets) sets += (sets.empty() ? "" : " ") + s.to_string();
  report.checks.push_back({"argmax_in_mwis", oracle.contains(argmax),
                           "argmax " + argmax.to_string() + ", oracle MWIS " + sets});

  const std::vector<double> density = engine::rydberg_density(r.distribution, n);
  double worst = r.rydberg_density.size() == density.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < density.size() && i < r.rydberg_density.size(); ++i)
    worst = std::max(worst, std::abs(density[i] - r.rydberg_density[i]));
  report.checks.push_back({"density_consistency", worst <= tolerance,
                           "largest deviation of stored <n_i> = " + std::to_string(worst)});
  return report;
}

}  // namespace rydanneal::cli
