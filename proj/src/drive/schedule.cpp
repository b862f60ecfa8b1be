#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rydanneal/drive.hpp"

namespace rydanneal::drive {

DriveSchedule::DriveSchedule(ScheduleParams p) : p_(std::move(p)) {
  if (!(p_.tau > 0.0) || !std::isfinite(p_.tau)) throw std::invalid_argument("tau must be positive");
  if (p_.tf1 < 0.0) p_.tf1 = p_.tau / 10.0;
  if (p_.tf2 < 0.0) p_.tf2 = 9.0 * p_.tau / 10.0;
  if (!(0.0 < p_.tf1 && p_.tf1 < p_.tf2 && p_.tf2 < p_.tau))
    throw std::invalid_argument("schedule needs 0 < tf1 < tf2 < tau");
  if (!(p_.alpha_d > 0.0) || !std::isfinite(p_.alpha_d)) throw std::invalid_argument("alpha_d must be positive");
  if (!(p_.omega0 >= 0.0) || !std::isfinite(p_.omega0)) throw std::invalid_argument("omega0 must be non-negative");
  if (!std::isfinite(p_.delta0)) throw std::invalid_argument("delta0 must be finite");
  if (p_.delta_f.empty()) throw std::invalid_argument("schedule needs at least one final detuning");
  for (double d : p_.delta_f)
    if (!std::isfinite(d)) throw std::invalid_argument("final detunings must be finite");
  const double s = std::sin(p_.alpha_d * (p_.tf2 - p_.tf1) / p_.tau);
  if (std::abs(s) < 1e-12) throw std::invalid_argument("sin(alpha_d (tf2 - tf1)/tau) vanishes; amplitude undefined");
  inv_sin2_end_ = 1.0 / (s * s);
}

double DriveSchedule::omega_at(double t) const {
  if (!(t >= 0.0 && t <= p_.tau)) throw std::out_of_range("time " + std::to_string(t) + " outside [0, tau]");
  if (t <= p_.tf1) return p_.omega0 * t / p_.tf1;
  if (t <= p_.tf2) return p_.omega0;
  return p_.omega0 * (t - p_.tau) / (p_.tf2 - p_.tau);
}

double DriveSchedule::sweep_fraction(double t) const {
  if (!(t >= 0.0 && t <= p_.tau)) throw std::out_of_range("time " + std::to_string(t) + " outside [0, tau]");
  if (t < p_.tf1) return 0.0;
  if (t >= p_.tf2) return 1.0;
  const double s = std::sin(p_.alpha_d * (t - p_.tf1) / p_.tau);
  return s * s * inv_sin2_end_;
}

double DriveSchedule::max_sweep_fraction() const {
  const double arg_end = p_.alpha_d * (p_.tf2 - p_.tf1) / p_.tau;
  if (arg_end >= std::numbers::pi / 2.0) return inv_sin2_end_;
  return 1.0;
}

double DriveSchedule::delta_at(int atom, double t) const {
  if (atom < 1 || atom > atoms()) throw std::out_of_range("atom index out of range");
  const double df = p_.delta_f[static_cast<std::size_t>(atom - 1)];
  if (!(t >= 0.0 && t <= p_.tau)) throw std::out_of_range("time " + std::to_string(t) + " outside [0, tau]");
  if (t < p_.tf1) return p_.delta0;
  if (t >= p_.tf2) return df;
  return (df - p_.delta0) * sweep_fraction(t) + p_.delta0;
}

std::vector<double> DriveSchedule::deltas_at(double t) const {
  std::vector<double> out(p_.delta_f.size());
  for (int i = 1; i <= atoms(); ++i) out[static_cast<std::size_t>(i - 1)] = delta_at(i, t);
  return out;
}

double DriveSchedule::sweep_rate(int atom) const {
  if (atom < 1 || atom > atoms()) throw std::out_of_range("atom index out of range");
  return (p_.delta_f[static_cast<std::size_t>(atom - 1)] - p_.delta0) / (p_.tf2 - p_.tf1);
}

double two_photon_rabi(double omega_420, double omega_1013, double delta_m) {
  if (delta_m == 0.0) throw std::invalid_argument("intermediate detuning must be non-zero");
  return omega_420 * omega_1013 / (2.0 * delta_m);
}

double blockade_radius(double c6, double omega0) {
  if (!(c6 > 0.0) || !(omega0 > 0.0)) throw std::invalid_argument("blockade radius needs positive C6 and Omega0");
  return std::pow(c6 / omega0, 1.0 / 6.0);
}

}  // namespace rydanneal::drive
