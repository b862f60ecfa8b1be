#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rydanneal/graphs.hpp"

namespace rydanneal::graphs {

namespace {

constexpr double kTieTolerance = 1e-9;

void check_oracle_input(const AtomArray& array, std::span<const double> weights) {
  if (array.size() > kOracleMaxVertices)
    throw std::invalid_argument("exhaustive oracle limited to " + std::to_string(kOracleMaxVertices) +
                                " vertices, got " + std::to_string(array.size()));
  if (weights.size() != static_cast<std::size_t>(array.size()))
    throw std::invalid_argument("weight count does not match vertex count");
}

// Visits every independent set of the array with its total weight. The
// recursion branches on the lowest undecided vertex, excluding its
// neighbours when it is taken.
template <class Visit>
void for_each_independent(const AtomArray& array, std::span<const double> weights, Visit&& visit) {
  const int n = array.size();
  std::vector<std::uint64_t> nb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nb[static_cast<std::size_t>(i)] = array.neighbours(i + 1);

  struct Frame {
    int next;
    std::uint64_t chosen;
    std::uint64_t blocked;
    double weight;
  };
  std::vector<Frame> stack{{0, 0, 0, 0.0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    while (f.next < n && ((f.blocked >> f.next) & 1u)) ++f.next;
    if (f.next == n) {
      visit(f.chosen, f.weight);
      continue;
    }
    const int v = f.next;
    stack.push_back({v + 1, f.chosen, f.blocked, f.weight});
    stack.push_back({v + 1, f.chosen | (std::uint64_t{1} << v), f.blocked | nb[static_cast<std::size_t>(v)],
                     f.weight + weights[static_cast<std::size_t>(v)]});
  }
}

}  // namespace

bool MwisResult::contains(VertexSet s) const { return std::binary_search(sets.begin(), sets.end(), s); }

MwisResult brute_force_mwis(const AtomArray& array, std::span<const double> weights) {
  check_oracle_input(array, weights);
  std::vector<WeightedSet> all;
  for_each_independent(array, weights, [&](std::uint64_t bits, double w) { all.push_back({VertexSet(bits), w}); });

  double best = -std::numeric_limits<double>::infinity();
  for (const WeightedSet& ws : all) best = std::max(best, ws.weight);
  const double tol = kTieTolerance * std::max(1.0, std::abs(best));

  MwisResult out;
  out.total_weight = best;
  for (const WeightedSet& ws : all)
    if (ws.weight >= best - tol) out.sets.push_back(ws.set);
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

MwisResult brute_force_mis(const AtomArray& array) {
  std::vector<double> ones(static_cast<std::size_t>(array.size()), 1.0);
  return brute_force_mwis(array, ones);
}

std::vector<WeightedSet> enumerate_independent_sets(const AtomArray& array, std::span<const double> weights) {
  check_oracle_input(array, weights);
  std::vector<WeightedSet> all;
  for_each_independent(array, weights, [&](std::uint64_t bits, double w) { all.push_back({VertexSet(bits), w}); });
  std::sort(all.begin(), all.end(), [](const WeightedSet& a, const WeightedSet& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.set < b.set;
  });
  return all;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::mwis: return "mwis";
    case Classification::independent: return "independent";
    case Classification::frustrated: return "frustrated";
  }
  return "?";
}

Classification classification_from_string(std::string_view name) {
  if (name == "mwis") return Classification::mwis;
  if (name == "independent") return Classification::independent;
  if (name == "frustrated") return Classification::frustrated;
  throw std::invalid_argument("unknown classification '" + std::string(name) + "'");
}

Classification classify_configuration(const AtomArray& array, VertexSet s, std::span<const double> weights) {
  return classify_configuration(array, s, brute_force_mwis(array, weights));
}

Classification classify_configuration(const AtomArray& array, VertexSet s, const MwisResult& oracle) {
  if (!is_independent(array, s)) return Classification::frustrated;
  return oracle.contains(s) ? Classification::mwis : Classification::independent;
}

}  // namespace rydanneal::graphs
