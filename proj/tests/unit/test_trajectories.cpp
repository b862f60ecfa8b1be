#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "rydanneal/drive.hpp"
#include "rydanneal/graphs.hpp"
#include "rydanneal/interaction.hpp"
#include "rydanneal/propagate.hpp"
#include "rydanneal/units.hpp"
#include "support/dense.hpp"

using namespace rydanneal;
using namespace rydanneal::engine;
using units::angular_from_mhz;

namespace {

drive::DriveSchedule schedule(int atoms) {
  drive::ScheduleParams p;
  p.omega0 = angular_from_mhz(1.75);
  p.delta0 = angular_from_mhz(-6.0);
  p.delta_f.assign(static_cast<std::size_t>(atoms), angular_from_mhz(6.0));
  p.tau = 5.0;
  return drive::DriveSchedule(p);
}

const double kFactor = std::pow(50.0 / 1140.0, 2);

}  // namespace

TEST_CASE("without decay the trajectory average is the Schrödinger result") {
  const InteractionTable t = InteractionTable::defaults();
  const graphs::AtomArray pan = graphs::library_graph(graphs::LibraryGraph::Pan3, 7.0);
  const auto s = schedule(4);
  const RunResult closed = propagate_tdse(pan, t, s);
  const std::vector<double> zero(4, 0.0);
  const RunResult traj = propagate_trajectories(pan, t, s, zero, 20, 5);
  REQUIRE(traj.ok);
  CHECK(traj.jumps == 0);
  for (std::size_t b = 0; b < 16; ++b) CHECK(std::abs(traj.distribution[b] - closed.distribution[b]) <= 1e-10);
}

TEST_CASE("trajectory results depend only on the seed") {
  const InteractionTable t = InteractionTable::defaults();
  const graphs::AtomArray p4 = graphs::library_graph(graphs::LibraryGraph::P4, 7.0);
  const auto s = schedule(4);
  const auto gamma = decay_rates(p4, t, GammaMode::bare, kFactor);
  RunOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const RunResult a = propagate_trajectories(p4, t, s, gamma, 50, 11, one);
  const RunResult b = propagate_trajectories(p4, t, s, gamma, 50, 11, many);
  const RunResult c = propagate_trajectories(p4, t, s, gamma, 50, 11, many);
  const RunResult d = propagate_trajectories(p4, t, s, gamma, 50, 12, many);
  CHECK(a.distribution == b.distribution);
  CHECK(a.std_error == b.std_error);
  CHECK(b.distribution == c.distribution);
  CHECK(a.jumps == b.jumps);
  CHECK(a.jumps > 0);
  CHECK(a.distribution != d.distribution);
  CHECK(a.trajectories == 50);
}

TEST_CASE("dissipation lowers the single-atom target population") {
  const InteractionTable t = InteractionTable::defaults();
  const graphs::AtomArray one = graphs::build_unit_disk_graph({{0, 0, 0}}, 1.0);
  const auto s = schedule(1);
  const double closed = propagate_tdse(one, t, s).distribution[1];
  const RunResult scaled =
      propagate_trajectories(one, t, s, decay_rates(one, t, GammaMode::scaled, kFactor), 400, 3);
  const RunResult bare = propagate_trajectories(one, t, s, decay_rates(one, t, GammaMode::bare, kFactor), 400, 3);
  CHECK(scaled.distribution[1] < closed);
  CHECK(bare.distribution[1] < scaled.distribution[1]);
}

TEST_CASE("trajectory average agrees with the density-matrix oracle") {
  const InteractionTable t = InteractionTable::defaults();
  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    std::vector<graphs::Vec3> pos;
    for (int i = 0; i < n; ++i) pos.push_back({8.0 * i, 1.5 * (i % 2), 0.0});
    const graphs::AtomArray a = graphs::build_unit_disk_graph(pos, 9.0);
    const auto s = schedule(n);
    const auto gamma = decay_rates(a, t, GammaMode::bare, kFactor);
    const oracle::Drive d{s.omega0(), s.delta0(), s.alpha_d(), s.tau(), s.tf1(), s.tf2(), s.delta_f()};
    const auto rho = oracle::lindblad_populations(d, interaction_matrix(a, t), n, gamma, 3000);
    RunOptions opt;
    opt.threads = 4;
    const RunResult r = propagate_trajectories(a, t, s, gamma, 1000, 2024, opt);
    for (std::size_t b = 0; b < rho.size(); ++b) {
      CAPTURE(b);
      CHECK(std::abs(r.distribution[b] - rho[b]) <= 3.0 * r.std_error[b] + 1e-9);
    }
  }
}
