#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rydanneal/analysis.hpp"

namespace rydanneal::analysis {

std::vector<VertexSet> zn_strings(int chain_length, int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("Z_n order needs 2 <= n <= 4");
  if (chain_length < 1 || chain_length > 64) throw std::invalid_argument("chain length must be in 1..64");
  std::vector<VertexSet> out;
  for (int shift = 0; shift < n && shift < chain_length; ++shift) {
    std::uint64_t bits = 0;
    for (int i = shift; i < chain_length; i += n) bits |= std::uint64_t{1} << i;
    out.emplace_back(bits);
  }
  return out;
}

void require_chain(const graphs::AtomArray& array) {
  const int n = array.size();
  if (n < 2) return;
  const auto& v = array.vertices();
  const graphs::Vec3 step = v[1].position - v[0].position;
  const double a = graphs::distance(v[1].position, v[0].position);
  for (int i = 1; i < n; ++i) {
    const graphs::Vec3 d = v[static_cast<std::size_t>(i)].position - v[static_cast<std::size_t>(i - 1)].position;
    if (graphs::distance(d, step) > 1e-9 * a)
      throw std::invalid_argument("Z_n order needs an evenly spaced chain indexed along the line");
  }
}

double zn_order(std::span<const double> distribution, int chain_length, int n) {
  if (distribution.size() != (std::size_t{1} << chain_length))
    throw std::invalid_argument("distribution size does not match the chain");
  double p = 0.0;
  for (VertexSet s : zn_strings(chain_length, n)) p += distribution[s.bits()];
  return p;
}

double zn_order(std::span<const double> distribution, const graphs::AtomArray& chain, int n) {
  require_chain(chain);
  return zn_order(distribution, chain.size(), n);
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::disordered: return "disordered";
    case Order::Z2: return "Z2";
    case Order::Z3: return "Z3";
    case Order::Z4: return "Z4";
    case Order::floating: return "floating";
  }
  return "?";
}

OrderReport order_report(std::span<const double> distribution, int chain_length, double threshold) {
  OrderReport r;
  r.p_z2 = zn_order(distribution, chain_length, 2);
  r.p_z3 = zn_order(distribution, chain_length, 3);
  r.p_z4 = zn_order(distribution, chain_length, 4);

  std::vector<double> by_count(static_cast<std::size_t>(chain_length) + 1, 0.0);
  double density = 0.0;
  for (std::size_t b = 0; b < distribution.size(); ++b) {
    const int c = std::popcount(static_cast<std::uint64_t>(b));
    by_count[static_cast<std::size_t>(c)] += distribution[b];
    density += c * distribution[b];
  }
  r.mean_density = density / chain_length;
  r.excitation_plateau = *std::max_element(by_count.begin(), by_count.end());

  const double best = std::max({r.p_z2, r.p_z3, r.p_z4});
  if (best >= threshold) {
    r.dominant = best == r.p_z2 ? Order::Z2 : best == r.p_z3 ? Order::Z3 : Order::Z4;
  } else if (r.mean_density >= 0.25 && r.mean_density <= 1.0 / 3.0 && r.excitation_plateau >= threshold) {
    r.dominant = Order::floating;
  }
  return r;
}

}  // namespace rydanneal::analysis
