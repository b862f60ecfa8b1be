#include <cmath>
#include <stdexcept>

#include "rydanneal/analysis.hpp"

namespace rydanneal::analysis {

BoundaryFit fit_phase_boundary(std::span<const std::pair<double, double>> points, double c6) {
  if (points.size() < 4) throw std::invalid_argument("boundary fit needs at least four points");
  if (!(c6 > 0.0)) throw std::invalid_argument("C6 must be positive");
  const double log_a = std::log(0.25 * c6);
  double sxx = 0.0, sxr = 0.0;
  for (const auto& [x, y] : points) {
    if (!(y > 0.0)) throw std::invalid_argument("boundary ordinates must be positive");
    sxx += x * x;
    sxr += x * (log_a - std::log(y));
  }
  if (sxx == 0.0) throw std::invalid_argument("boundary abscissae are all zero");
  BoundaryFit fit;
  fit.xi = sxr / sxx;
  fit.points = static_cast<int>(points.size());
  double ss = 0.0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (log_a - fit.xi * x);
    ss += r * r;
  }
  fit.rms_log_residual = std::sqrt(ss / static_cast<double>(points.size()));
  return fit;
}

FloatingWindow floating_phase_scan(const std::vector<FloatingScanPoint>& scan) {
  FloatingWindow w;
  for (const FloatingScanPoint& p : scan) {
    if (p.rb_over_a < 1.0 || p.rb_over_a > 3.2)
      w.warnings.push_back("R_b/a = " + std::to_string(p.rb_over_a) +
                           " lies outside the van der Waals validity range 1..3.2");
    if (p.report.dominant != Order::floating) continue;
    w.floating_points.push_back(p);
    if (!w.lower || p.rb_over_a < *w.lower) w.lower = p.rb_over_a;
    if (!w.upper || p.rb_over_a > *w.upper) w.upper = p.rb_over_a;
  }
  return w;
}

}  // namespace rydanneal::analysis
