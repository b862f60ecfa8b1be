#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rydanneal/graph_io.hpp"
#include "rydanneal/graphs.hpp"

using namespace rydanneal;
using namespace rydanneal::graphs;

namespace {

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> l) {
  std::vector<VertexSet> out;
  for (auto s : l) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

// Direct 2^N scan that checks every pair by distance.
std::pair<double, std::vector<VertexSet>> naive_mwis(const AtomArray& a, const std::vector<double>& w) {
  const int n = a.size();
  double best = -1.0;
  std::vector<VertexSet> arg;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    double total = 0.0;
    for (int i = 0; i < n && ok; ++i) {
      if (!((m >> i) & 1u)) continue;
      total += w[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j)
        if (((m >> j) & 1u) && distance(a.vertex(i + 1).position, a.vertex(j + 1).position) <= a.unit_disk_radius())
          ok = false;
    }
    if (!ok) continue;
    if (total > best + 1e-12) {
      best = total;
      arg.clear();
    }
    if (std::abs(total - best) <= 1e-12) arg.emplace_back(m);
  }
  return {best, arg};
}

}  // namespace

TEST_CASE("maximum independent sets of the library graphs") {
  CHECK(brute_force_mis(library_graph(LibraryGraph::P4, 7.0)).sets == sets({{1, 3}, {1, 4}, {2, 4}}));
  CHECK(brute_force_mis(library_graph(LibraryGraph::P4, 7.0)).total_weight == 2.0);
  CHECK(brute_force_mis(library_graph(LibraryGraph::Pan3, 7.0)).sets == sets({{1, 4}, {2, 4}}));
  const MwisResult tower = brute_force_mis(library_graph(LibraryGraph::Tower, 7.0));
  CHECK(tower.sets == sets({{1, 5, 7}, {1, 3, 5}, {1, 4, 7}, {2, 5, 7}}));
  CHECK(tower.total_weight == 3.0);
  CHECK(brute_force_mis(library_graph(LibraryGraph::J14, 7.0)).sets ==
        sets({{1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 8}, {3, 8}, {4, 8}}));
  CHECK(brute_force_mis(library_graph(LibraryGraph::Pan7_W2, 7.0)).contains(VertexSet{1, 4, 6, 7}));
}

TEST_CASE("classification") {
  const AtomArray pan = library_graph(LibraryGraph::Pan3, 7.0);
  const std::vector<double> ones(4, 1.0);
  CHECK(classify_configuration(pan, VertexSet{1, 2, 4}, ones) == Classification::frustrated);
  CHECK(classify_configuration(pan, VertexSet{1, 4}, ones) == Classification::mwis);
  CHECK(classify_configuration(pan, VertexSet{}, ones) == Classification::independent);
  CHECK(classify_configuration(pan, VertexSet{4}, ones) == Classification::independent);
  for (auto c : {Classification::mwis, Classification::independent, Classification::frustrated})
    CHECK(classification_from_string(to_string(c)) == c);
}

TEST_CASE("shipped example weights reproduce the weighted optima") {
  const std::string dir = RYDANNEAL_DATA_DIR "/graphs/";
  auto mwis = [&](const char* file) {
    const GraphDefinition d = load_graph_file(dir + file);
    return brute_force_mwis(d.array, d.array.weights()).sets;
  };
  CHECK(mwis("p4_mwis.json") == sets({{1, 3}}));
  CHECK(mwis("pan3_mwis.json") == sets({{1, 4}}));
  CHECK(mwis("j14_mwis.json") == sets({{1, 5}}));
  CHECK(mwis("pan5_w1.json") == sets({{1, 4, 6}}));
  CHECK(mwis("pan7_w2.json") == sets({{1, 4, 6, 7}}));
}

TEST_CASE("oracle is sound and complete on random unit-disk graphs") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coord(0.0, 25.0), weight(0.1, 5.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 11;
    std::vector<Vec3> pos;
    while (static_cast<int>(pos.size()) < n) {
      const Vec3 p{coord(rng), coord(rng), 0.0};
      bool far = true;
      for (const Vec3& q : pos) far = far && distance(p, q) > 2.5;
      if (far) pos.push_back(p);
    }
    const AtomArray a = build_unit_disk_graph(pos, 8.0);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (double& x : w) x = trial % 2 ? weight(rng) : 1.0;
    const MwisResult r = brute_force_mwis(a, w);
    const auto [best, arg] = naive_mwis(a, w);
    CAPTURE(trial);
    CHECK(r.total_weight == doctest::Approx(best).epsilon(1e-12));
    CHECK(r.sets == arg);
    for (VertexSet s : r.sets) CHECK(is_independent(a, s));

    const auto all = enumerate_independent_sets(a, w);
    CHECK(all.front().weight == doctest::Approx(best));
    for (std::size_t k = 1; k < all.size(); ++k) {
      CHECK(all[k - 1].weight >= all[k].weight);
      if (all[k - 1].weight == all[k].weight) CHECK(all[k - 1].set < all[k].set);
    }
  }
}

TEST_CASE("oracle limits") {
  std::vector<Vec3> line;
  for (int i = 0; i < 25; ++i) line.push_back({3.0 * i, 0.0, 0.0});
  const AtomArray big = build_unit_disk_graph(line, 3.0);
  CHECK_THROWS_AS(brute_force_mis(big), std::invalid_argument);
  const AtomArray one = build_unit_disk_graph({{0, 0, 0}}, 1.0);
  CHECK(brute_force_mis(one).sets == sets({{1}}));
  CHECK_THROWS(brute_force_mwis(one, std::vector<double>{1.0, 2.0}));
}
