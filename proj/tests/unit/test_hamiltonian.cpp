#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rydanneal/drive.hpp"
#include "rydanneal/graphs.hpp"
#include "rydanneal/hamiltonian.hpp"
#include "rydanneal/interaction.hpp"
#include "rydanneal/units.hpp"
#include "support/dense.hpp"

using namespace rydanneal;
using namespace rydanneal::engine;
using units::angular_from_mhz;

namespace {

State random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  State s(dim);
  for (Complex& c : s) c = {g(rng), g(rng)};
  return s;
}

Complex dot(const State& a, const State& b) {
  Complex s;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

drive::DriveSchedule schedule_for(const graphs::AtomArray& a, double delta_f_mhz) {
  drive::ScheduleParams p;
  p.omega0 = angular_from_mhz(1.75);
  p.delta0 = angular_from_mhz(-6.0);
  p.delta_f.assign(static_cast<std::size_t>(a.size()), angular_from_mhz(delta_f_mhz));
  for (std::size_t i = 0; i < p.delta_f.size(); ++i) p.delta_f[i] += angular_from_mhz(0.3 * static_cast<double>(i));
  return drive::DriveSchedule(p);
}

}  // namespace

TEST_CASE("cost diagonal examples") {
  const InteractionTable t = InteractionTable::defaults();
  const graphs::AtomArray one = graphs::build_unit_disk_graph({{0, 0, 0}}, 1.0);
  const auto e1 = diagonal_energies(one, t, std::vector<double>{angular_from_mhz(4.0)});
  CHECK(e1[0] == 0.0);
  CHECK(e1[1] == doctest::Approx(-angular_from_mhz(4.0)));

  const double omega0 = angular_from_mhz(1.75);
  const double rb = drive::blockade_radius(t.pair(graphs::Species::graph, graphs::Species::graph).c6, omega0);
  const graphs::AtomArray two = graphs::build_unit_disk_graph({{0, 0, 0}, {rb, 0, 0}}, rb);
  const std::vector<double> d{1.0, 2.5};
  const auto e2 = diagonal_energies(two, t, d);
  CHECK(e2[0] == 0.0);
  CHECK(e2[1] == -1.0);
  CHECK(e2[2] == -2.5);
  CHECK(e2[3] == doctest::Approx(-3.5 + omega0));

  CHECK_THROWS_AS(diagonal_energies(two, t, std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_energies(two, t, d, 1), std::invalid_argument);
}

TEST_CASE("driver action examples") {
  const std::vector<Complex> in{1.0, 0.0};
  const std::vector<double> diag{0.0, -3.0};
  std::vector<Complex> out(2);
  apply_hamiltonian(in, diag, 2.0, out);
  CHECK(out[0] == Complex(0.0));
  CHECK(out[1] == Complex(1.0));

  const std::vector<Complex> in2{0.5, Complex(0, 2)};
  apply_hamiltonian(in2, diag, 0.0, out);
  CHECK(out[0] == Complex(0.0));
  CHECK(out[1] == Complex(0, -6.0));
}

TEST_CASE("matrix-free action equals the Kronecker-product Hamiltonian") {
  const InteractionTable t = InteractionTable::defaults();
  std::mt19937_64 rng(7);
  for (auto g : {graphs::LibraryGraph::P4, graphs::LibraryGraph::Pan3, graphs::LibraryGraph::Fan3,
                 graphs::LibraryGraph::Tower}) {
    CAPTURE(graphs::to_string(g));
    const graphs::AtomArray a = graphs::library_graph(g, 6.0);
    const int n = a.size();
    const drive::DriveSchedule s = schedule_for(a, 4.0);
    oracle::Drive d{s.omega0(), s.delta0(), s.alpha_d(), s.tau(), s.tf1(), s.tf2(), s.delta_f()};
    const std::vector<double> v = interaction_matrix(a, t);
    for (double time : {0.0, 0.3, 1.7, 4.5, 4.8}) {
      const oracle::Mat h = oracle::hamiltonian(d, v, n, time);
      const auto diag = diagonal_energies(a, t, s.deltas_at(time));
      const State x = random_state(std::size_t{1} << n, rng);
      State y(x.size());
      apply_hamiltonian(x, diag, s.omega_at(time), y);
      const auto ref = oracle::apply(h, x);
      double err = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < y.size(); ++k) {
        err = std::max(err, std::abs(y[k] - ref[k]));
        scale = std::max(scale, std::abs(ref[k]));
      }
      CHECK(err <= 1e-12 * scale);
    }
  }
}

TEST_CASE("matrix-free Hamiltonian is Hermitian") {
  const InteractionTable t = InteractionTable::defaults();
  std::vector<graphs::Vec3> pos;
  for (int i = 0; i < 6; ++i) pos.push_back({6.0 * (i % 3), 6.5 * (i / 3), 0.0});
  const graphs::AtomArray a = graphs::build_unit_disk_graph(pos, 7.0);
  const drive::DriveSchedule s = schedule_for(a, 3.0);
  std::mt19937_64 rng(99);
  for (double time : {0.2, 2.0, 4.7}) {
    const auto diag = diagonal_energies(a, t, s.deltas_at(time));
    for (int trial = 0; trial < 5; ++trial) {
      const State x = random_state(64, rng), y = random_state(64, rng);
      State hx(64), hy(64);
      apply_hamiltonian(x, diag, s.omega_at(time), hx);
      apply_hamiltonian(y, diag, s.omega_at(time), hy);
      const Complex lhs = dot(x, hy), rhs = dot(hx, y);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
  }
}

TEST_CASE("cost terms reproduce the diagonal at any time") {
  const InteractionTable t = InteractionTable::defaults();
  for (double alpha : {1.0, 2.0}) {
    const graphs::AtomArray a = graphs::library_graph(graphs::LibraryGraph::Pan5_W1, 7.0);
    drive::ScheduleParams p = schedule_for(a, 4.0).params();
    p.alpha_d = alpha;
    const drive::DriveSchedule s(p);
    const CostTerms c = build_cost_terms(a, t, s);
    REQUIRE(c.dimension() == 64);
    for (double time : {0.0, 0.7, 2.2, 4.4, 4.5, 5.0}) {
      const auto ref = diagonal_energies(a, t, s.deltas_at(time));
      const double f = s.sweep_fraction(time);
      for (std::size_t b = 0; b < ref.size(); ++b)
        CHECK(c.energy(b, s.delta0(), f) == doctest::Approx(ref[b]).epsilon(1e-12).scale(1e3));
    }
  }
}
