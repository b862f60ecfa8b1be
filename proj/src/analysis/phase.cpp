#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "rydanneal/analysis.hpp"

namespace rydanneal::analysis {

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::PM_down: return "PM_down";
    case Phase::single_excitation: return "single_excitation";
    case Phase::MIS_AFM: return "MIS_AFM";
    case Phase::multi_excitation: return "multi_excitation";
    case Phase::PM_up: return "PM_up";
    case Phase::floating: return "floating";
  }
  return "?";
}

Phase classify_phase(std::span<const double> distribution, const graphs::AtomArray& array, double threshold) {
  const int n = array.size();
  if (distribution.size() != (std::size_t{1} << n))
    throw std::invalid_argument("distribution size does not match the array");
  const int alpha = graphs::brute_force_mis(array).sets.front().size();

  std::array<double, 5> mass{};
  for (std::size_t b = 0; b < distribution.size(); ++b) {
    const double p = distribution[b];
    const int c = std::popcount(static_cast<std::uint64_t>(b));
    if (c == 0) mass[0] += p;
    if (c == 1) mass[1] += p;
    if (c == alpha && graphs::is_independent(array, VertexSet(b))) mass[2] += p;
    if (c == n - 1) mass[3] += p;
    if (c == n) mass[4] += p;
  }
  const auto best = std::max_element(mass.begin(), mass.end());
  if (*best < threshold) return Phase::floating;
  return static_cast<Phase>(best - mass.begin());
}

std::vector<std::pair<double, double>> extract_boundary(std::vector<PhasePoint> grid, Phase below, Phase above) {
  std::stable_sort(grid.begin(), grid.end(), [](const PhasePoint& a, const PhasePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<std::pair<double, double>> out;
  std::size_t i = 0;
  while (i < grid.size()) {
    std::size_t j = i;
    while (j < grid.size() && grid[j].x == grid[i].x) ++j;
    for (std::size_t k = i + 1; k < j; ++k) {
      if (grid[k - 1].phase == below && grid[k].phase == above) {
        out.emplace_back(grid[i].x, 0.5 * (grid[k - 1].y + grid[k].y));
        break;
      }
    }
    i = j;
  }
  return out;
}

}  // namespace rydanneal::analysis
