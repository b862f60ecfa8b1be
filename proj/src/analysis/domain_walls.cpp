#include <stdexcept>
#include <string>

#include "rydanneal/analysis.hpp"

namespace rydanneal::analysis {

namespace {

DomainWalls count_runs(const std::vector<int>& sites) {
  DomainWalls w;
  std::size_t i = 0;
  while (i < sites.size()) {
    std::size_t j = i + 1;
    while (j < sites.size() && sites[j] == sites[i]) ++j;
    const std::size_t run = j - i;
    if (run == 2) ++w.type_i;
    else if (run == 3) ++w.type_ii;
    else if (run > 3) ++w.longer;
    i = j;
  }
  return w;
}

}  // namespace

DomainWalls detect_domain_walls(VertexSet bits, int chain_length) {
  if (chain_length < 1 || chain_length > 64) throw std::invalid_argument("chain length must be in 1..64");
  std::vector<int> sites(static_cast<std::size_t>(chain_length));
  for (int i = 0; i < chain_length; ++i) sites[static_cast<std::size_t>(i)] = bits.contains(i + 1) ? 1 : 0;
  return count_runs(sites);
}

DomainWalls detect_domain_walls(std::string_view bitstring) {
  std::vector<int> sites;
  for (char c : bitstring) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring may only contain 0 and 1");
    sites.push_back(c == '1');
  }
  return count_runs(sites);
}

DomainWallReport domain_wall_report(std::span<const double> distribution, int chain_length) {
  if (distribution.size() != (std::size_t{1} << chain_length))
    throw std::invalid_argument("distribution size does not match the chain");
  DomainWallReport r;
  for (std::size_t b = 0; b < distribution.size(); ++b) {
    const double p = distribution[b];
    if (p == 0.0) continue;
    const DomainWalls w = detect_domain_walls(VertexSet(b), chain_length);
    if (w.type_i > 0) r.type_i_prob += p;
    if (w.type_ii > 0) r.type_ii_prob += p;
    if (w.total() > 0) r.any_wall_prob += p;
    r.mean_walls += p * w.total();
  }
  return r;
}

}  // namespace rydanneal::analysis
