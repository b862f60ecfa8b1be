#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "rydanneal/analysis.hpp"

using namespace rydanneal::analysis;

namespace {

std::vector<std::pair<double, double>> logistic(double centre, double width = 0.4) {
  std::vector<std::pair<double, double>> pts;
  for (double x = -1.0; x <= 3.0 + 1e-9; x += 0.25) pts.emplace_back(x, 0.5 / (1.0 + std::exp(-(x - centre) / width)));
  return pts;
}

}  // namespace

TEST_CASE("natural cubic spline") {
  const CubicSpline line({0, 1, 2, 3, 5}, {1, 3, 5, 7, 11});
  for (double x : {0.0, 0.3, 1.7, 4.2, 5.0}) {
    CHECK(line(x) == doctest::Approx(1 + 2 * x));
    CHECK(line.derivative(x) == doctest::Approx(2.0));
  }
  const CubicSpline s({0, 1, 2, 3, 4}, {0, 1, 0, 1, 0});
  for (int k = 0; k <= 4; ++k) CHECK(s(k) == doctest::Approx(k % 2));
  // derivative matches a finite difference of the spline itself
  for (double x : {0.4, 1.5, 2.9, 3.6}) CHECK(s.derivative(x) == doctest::Approx((s(x + 1e-6) - s(x - 1e-6)) / 2e-6).epsilon(1e-6));
  CHECK_THROWS(CubicSpline({0, 0, 1}, {1, 2, 3}));
}

TEST_CASE("critical detuning sits at the inflection") {
  for (double centre : {0.2, 1.3, 2.1}) {
    CAPTURE(centre);
    const SusceptibilityCurve c = susceptibility_curve(logistic(centre));
    REQUIRE(c.critical_detuning);
    CHECK(std::abs(*c.critical_detuning - centre) <= 0.025 + 1e-9);
    CHECK(c.flag.empty());
    CHECK(c.samples.size() == 161);
  }
}

TEST_CASE("degenerate inputs") {
  std::vector<std::pair<double, double>> flat;
  for (int k = 0; k < 8; ++k) flat.emplace_back(k * 0.5, 0.3);
  const SusceptibilityCurve c = susceptibility_curve(flat);
  CHECK_FALSE(c.critical_detuning);
  CHECK_FALSE(c.flag.empty());
  for (const auto& p : c.samples) CHECK(p.chi == doctest::Approx(0.0));

  const SusceptibilityCurve edge = susceptibility_curve(logistic(4.0));
  CHECK_FALSE(edge.critical_detuning);
  CHECK(edge.flag.find("endpoint") != std::string::npos);

  CHECK_THROWS_AS(susceptibility_curve({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(susceptibility_curve({{0, 0}, {1, 1}, {1, 2}, {3, 3}, {4, 4}}), std::invalid_argument);
}

TEST_CASE("unsorted input is ordered by detuning") {
  auto pts = logistic(1.0);
  std::reverse(pts.begin(), pts.end());
  const SusceptibilityCurve c = susceptibility_curve(pts);
  REQUIRE(c.critical_detuning);
  CHECK(std::abs(*c.critical_detuning - 1.0) <= 0.025 + 1e-9);
}
