#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "rydanneal/analysis.hpp"
#include "rydanneal/drive.hpp"
#include "rydanneal/graphs.hpp"
#include "rydanneal/interaction.hpp"
#include "rydanneal/propagate.hpp"
#include "rydanneal/units.hpp"

using namespace rydanneal;
using namespace rydanneal::analysis;
using graphs::Classification;

namespace {

std::vector<double> run_p4(double delta_f_over_omega0) {
  drive::ScheduleParams p;
  p.omega0 = units::angular_from_mhz(1.75);
  p.delta0 = units::angular_from_mhz(-6.0);
  p.delta_f.assign(4, delta_f_over_omega0 * p.omega0);
  p.tau = 5.0;
  const graphs::AtomArray p4 = graphs::library_graph(graphs::LibraryGraph::P4, 7.0);
  return engine::propagate_tdse(p4, engine::InteractionTable::defaults(), drive::DriveSchedule(p)).distribution;
}

std::vector<double> delta_on(int atoms, VertexSet s) {
  std::vector<double> d(std::size_t{1} << atoms, 0.0);
  d[s.bits()] = 1.0;
  return d;
}

}  // namespace

TEST_CASE("ranking") {
  const graphs::AtomArray p4 = graphs::library_graph(graphs::LibraryGraph::P4, 7.0);
  const std::vector<double> ones(4, 1.0);

  const std::vector<double> uniform(16, 1.0 / 16);
  const auto flat = rank_solutions(uniform, p4, ones);
  for (std::size_t k = 0; k < 16; ++k) CHECK(flat[k].set.bits() == k);

  const auto ranked = rank_solutions(run_p4(2.28), p4, ones);
  std::vector<VertexSet> top{ranked[0].set, ranked[1].set, ranked[2].set};
  std::sort(top.begin(), top.end());
  CHECK(top == std::vector<VertexSet>{VertexSet{1, 3}, VertexSet{1, 4}, VertexSet{2, 4}});
  for (int k = 0; k < 3; ++k) CHECK(ranked[static_cast<std::size_t>(k)].cls == Classification::mwis);
  for (std::size_t k = 1; k < ranked.size(); ++k) CHECK(ranked[k - 1].probability >= ranked[k].probability);
  CHECK(ranked.back().probability >= 0.0);
}

TEST_CASE("Zn strings and order") {
  CHECK(zn_strings(9, 2) == std::vector<VertexSet>{VertexSet::from_bitstring("101010101"),
                                                  VertexSet::from_bitstring("010101010")});
  const auto z3 = zn_strings(10, 3);
  CHECK(std::find(z3.begin(), z3.end(), VertexSet::from_bitstring("1001001001")) != z3.end());

  std::vector<double> d(512, 0.0);
  d[VertexSet::from_bitstring("101010101").bits()] = 0.6;
  d[0] = 0.4;
  CHECK(zn_order(d, 9, 2) == doctest::Approx(0.6));
  CHECK(zn_order(d, 9, 3) == 0.0);
  CHECK(zn_order(d, 9, 4) == 0.0);
  CHECK(zn_order(delta_on(9, VertexSet{}), 9, 2) == 0.0);

  const auto r = order_report(d, 9);
  CHECK(r.dominant == Order::Z2);
  CHECK(r.p_z2 == doctest::Approx(0.6));
  CHECK(r.mean_density == doctest::Approx(0.6 * 5 / 9));

  const auto z3r = order_report(delta_on(10, VertexSet::from_bitstring("1001001001")), 10);
  CHECK(z3r.dominant == Order::Z3);
  CHECK(order_report(delta_on(8, VertexSet{}), 8).dominant == Order::disordered);

  CHECK_THROWS(zn_order(d, 9, 5));
  CHECK_THROWS(zn_order(d, 8, 2));
  CHECK_THROWS(zn_order(d, graphs::library_graph(graphs::LibraryGraph::P4, 7.0), 2));
  CHECK_NOTHROW(require_chain(graphs::linear_chain(9, 5.0)));
}

TEST_CASE("floating order needs an incommensurate density and a sharp excitation number") {
  // three excitations on ten sites spread over non-periodic placements
  std::vector<double> d(1024, 0.0);
  const char* states[] = {"1000010001", "1000100001", "1000001001", "0100010001"};
  for (const char* s : states) d[VertexSet::from_bitstring(s).bits()] += 0.2;
  d[VertexSet::from_bitstring("1001001001").bits()] = 0.1;
  d[VertexSet::from_bitstring("1000000001").bits()] = 0.1;
  const auto r = order_report(d, 10);
  CHECK(r.p_z3 == doctest::Approx(0.1));
  CHECK(r.mean_density == doctest::Approx((0.8 * 3 + 0.1 * 4 + 0.1 * 2) / 10));
  CHECK(r.excitation_plateau == doctest::Approx(0.8));
  CHECK(r.dominant == Order::floating);

  // same spread at a commensurate-looking density is not floating
  std::vector<double> sparse(1024, 0.0);
  sparse[VertexSet::from_bitstring("1000000001").bits()] = 1.0;
  CHECK(order_report(sparse, 10).dominant == Order::disordered);
}

TEST_CASE("phase classification") {
  const graphs::AtomArray p4 = graphs::library_graph(graphs::LibraryGraph::P4, 7.0);
  CHECK(classify_phase(delta_on(4, VertexSet{}), p4) == Phase::PM_down);
  CHECK(classify_phase(delta_on(4, VertexSet{2}), p4) == Phase::single_excitation);
  CHECK(classify_phase(delta_on(4, VertexSet{1, 3}), p4) == Phase::MIS_AFM);
  CHECK(classify_phase(delta_on(4, VertexSet{1, 2, 3}), p4) == Phase::multi_excitation);
  CHECK(classify_phase(delta_on(4, VertexSet{1, 2, 3, 4}), p4) == Phase::PM_up);
  const std::vector<double> uniform(16, 1.0 / 16);
  CHECK(classify_phase(uniform, p4) == Phase::floating);
  CHECK(classify_phase(uniform, p4, 0.25) == Phase::single_excitation);

  CHECK(classify_phase(run_p4(-0.5), p4) == Phase::PM_down);
  CHECK(classify_phase(run_p4(2.28), p4) == Phase::MIS_AFM);
}

TEST_CASE("boundary extraction") {
  std::vector<PhasePoint> grid;
  auto add = [&](double x, double y, Phase p) { grid.push_back({x, y, p}); };
  add(1.0, 0.0, Phase::PM_down);
  add(1.0, 0.5, Phase::single_excitation);
  add(1.0, 1.0, Phase::MIS_AFM);
  add(2.0, 1.0, Phase::single_excitation);
  add(2.0, 0.5, Phase::single_excitation);
  add(2.0, 1.5, Phase::MIS_AFM);
  add(2.0, 2.0, Phase::single_excitation);
  add(2.0, 2.5, Phase::MIS_AFM);
  add(3.0, 1.0, Phase::single_excitation);
  const auto b = extract_boundary(grid, Phase::single_excitation, Phase::MIS_AFM);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::pair{1.0, 0.75});
  CHECK(b[1] == std::pair{2.0, 1.25});
}
