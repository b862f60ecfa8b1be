#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rydanneal/analysis.hpp"

namespace rydanneal::analysis {

SusceptibilityCurve susceptibility_curve(std::vector<std::pair<double, double>> points) {
  if (points.size() < 5) throw std::invalid_argument("susceptibility needs at least five points");
  const bool descending = points[1].first < points[0].first;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const bool ok = descending ? points[i].first < points[i - 1].first : points[i].first > points[i - 1].first;
    if (!ok) throw std::invalid_argument("detuning grid must be strictly monotone");
  }
  if (descending) std::reverse(points.begin(), points.end());

  std::vector<double> x, y;
  for (const auto& [d, n] : points) {
    x.push_back(d);
    y.push_back(n);
  }
  const CubicSpline spline(x, y);

  SusceptibilityCurve curve;
  constexpr int kRefine = 10;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    for (int k = 0; k < kRefine; ++k) {
      const double d = x[i] + (x[i + 1] - x[i]) * k / kRefine;
      curve.samples.push_back({d, spline(d), spline.derivative(d)});
    }
  }
  curve.samples.push_back({x.back(), y.back(), spline.derivative(x.back())});

  double scale = 0.0;
  for (const auto& s : curve.samples) scale = std::max(scale, std::abs(s.chi));
  double span = 0.0;
  for (double v : y) span = std::max(span, std::abs(v - y.front()));
  if (span == 0.0 || scale == 0.0) {
    curve.flag = "constant density: susceptibility vanishes";
    return curve;
  }
  const auto peak = std::max_element(curve.samples.begin(), curve.samples.end(),
                                     [](const auto& a, const auto& b) { return a.chi < b.chi; });
  if (!(peak->chi > 0.0)) {
    curve.flag = "susceptibility has no positive maximum";
    return curve;
  }
  if (peak == curve.samples.begin() || peak + 1 == curve.samples.end()) {
    curve.flag = "susceptibility peaks at a grid endpoint";
    return curve;
  }
  curve.critical_detuning = peak->delta_f;
  return curve;
}

}  // namespace rydanneal::analysis
