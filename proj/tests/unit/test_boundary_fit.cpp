#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "rydanneal/analysis.hpp"

using namespace rydanneal;
using namespace rydanneal::analysis;

namespace {

std::vector<std::pair<double, double>> planted(double xi, double c6 = 2550.0) {
  std::vector<std::pair<double, double>> pts;
  for (double x = 1.0; x <= 3.0 + 1e-9; x += 0.25) pts.emplace_back(x, 0.25 * c6 * std::exp(-xi * x));
  return pts;
}

}  // namespace

TEST_CASE("noiseless boundaries are recovered exactly") {
  for (double xi : {1.23, 1.4, 2.8}) {
    const BoundaryFit f = fit_phase_boundary(planted(xi));
    CHECK(std::abs(f.xi - xi) <= 1e-6);
    CHECK(f.rms_log_residual <= 1e-9);
    CHECK(f.points == 9);
  }
  CHECK(std::abs(fit_phase_boundary(planted(1.7, 3061.0), 3061.0).xi - 1.7) <= 1e-6);
}

TEST_CASE("five percent noise keeps the fit within ten percent") {
  std::mt19937_64 rng(2718);
  std::normal_distribution<double> noise(0.0, 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    auto pts = planted(2.8);
    for (auto& p : pts) p.second *= 1.0 + noise(rng);
    CHECK(std::abs(fit_phase_boundary(pts).xi - 2.8) <= 0.28);
  }
}

TEST_CASE("fit input validation") {
  CHECK_THROWS(fit_phase_boundary(std::vector<std::pair<double, double>>{{1, 1}, {2, 1}, {3, 1}}));
  CHECK_THROWS(fit_phase_boundary(std::vector<std::pair<double, double>>{{1, 1}, {2, 1}, {3, 0}, {4, 1}}));
  CHECK_THROWS(fit_phase_boundary(planted(1.0), -1.0));
}

TEST_CASE("floating scan collects flagged points and warns outside the validity window") {
  auto point = [](double rb, double y, Order o) {
    FloatingScanPoint p;
    p.rb_over_a = rb;
    p.delta_f_over_omega0 = y;
    p.report.dominant = o;
    return p;
  };
  const FloatingWindow w = floating_phase_scan({point(1.5, 1.5, Order::Z2), point(2.6, 1.5, Order::floating),
                                                point(2.9, 1.5, Order::floating), point(3.1, 1.0, Order::Z3),
                                                point(3.5, 1.5, Order::floating)});
  REQUIRE(w.lower);
  REQUIRE(w.upper);
  CHECK(*w.lower == 2.6);
  CHECK(*w.upper == 3.5);
  CHECK(w.floating_points.size() == 3);
  CHECK(w.warnings.size() == 1);

  const FloatingWindow none = floating_phase_scan({point(1.5, 1.5, Order::Z2)});
  CHECK_FALSE(none.lower);
  CHECK(none.warnings.empty());
}
