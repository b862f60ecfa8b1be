#include <algorithm>
#include <stdexcept>

#include "rydanneal/analysis.hpp"

namespace rydanneal::analysis {

std::vector<RankedSolution> rank_solutions(std::span<const double> distribution, const graphs::AtomArray& array,
                                           std::span<const double> weights) {
  const std::size_t dim = std::size_t{1} << array.size();
  if (distribution.size() != dim) throw std::invalid_argument("distribution size does not match the array");
  const graphs::MwisResult oracle = graphs::brute_force_mwis(array, weights);
  std::vector<RankedSolution> out;
  out.reserve(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const VertexSet s(b);
    out.push_back({s, distribution[b], graphs::classify_configuration(array, s, oracle)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedSolution& a, const RankedSolution& b) { return a.probability > b.probability; });
  return out;
}

}  // namespace rydanneal::analysis
