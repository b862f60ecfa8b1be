#pragma once

#include <span>
#include <vector>

namespace rydanneal::drive {

// Ω(t) ramps linearly up on [0, t_f1], holds Ω₀ on (t_f1, t_f2] and ramps
// back to zero on (t_f2, τ]. Each atom's detuning holds Δ₀ before t_f1,
// follows 𝔸 sin²(α_d (t - t_f1)/τ) + Δ₀ on [t_f1, t_f2) with
// 𝔸 = (Δ_f - Δ₀) csc²(α_d (t_f2 - t_f1)/τ), and sits at Δ_f(i) afterwards.
// Frequencies are rad/μs, times μs.
struct ScheduleParams {
  double omega0 = 0.0;
  double delta0 = 0.0;
  std::vector<double> delta_f;  // per atom
  double alpha_d = 1.0;
  double tau = 5.0;
  double tf1 = -1.0;  // negative: τ/10
  double tf2 = -1.0;  // negative: 9τ/10
};

class DriveSchedule {
 public:
  // Throws std::invalid_argument unless 0 < t_f1 < t_f2 < τ, α_d > 0,
  // Ω₀ >= 0 and sin(α_d (t_f2 - t_f1)/τ) != 0.
  explicit DriveSchedule(ScheduleParams p);

  double omega0() const { return p_.omega0; }
  double delta0() const { return p_.delta0; }
  double alpha_d() const { return p_.alpha_d; }
  double tau() const { return p_.tau; }
  double tf1() const { return p_.tf1; }
  double tf2() const { return p_.tf2; }
  int atoms() const { return static_cast<int>(p_.delta_f.size()); }
  const std::vector<double>& delta_f() const { return p_.delta_f; }
  const ScheduleParams& params() const { return p_; }

  // Ω(t); throws std::out_of_range outside [0, τ].
  double omega_at(double t) const;
  // Δ_atom(t) for a 1-based atom index.
  double delta_at(int atom, double t) const;
  std::vector<double> deltas_at(double t) const;

  // Every atom's detuning is Δ₀ + (Δ_f(i) - Δ₀)·f(t) with a shared f:
  // 0 before t_f1, sin²(α_d(t - t_f1)/τ)/sin²(α_d(t_f2 - t_f1)/τ) on the
  // sweep window, 1 afterwards.
  double sweep_fraction(double t) const;
  // Largest value f(t) reaches; exceeds 1 when the sine argument passes π/2.
  double max_sweep_fraction() const;

  // Mean detuning sweep rate (Δ_f - Δ₀)/(t_f2 - t_f1) for the given atom.
  double sweep_rate(int atom = 1) const;

 private:
  ScheduleParams p_;
  double inv_sin2_end_ = 1.0;
};

// Ω₀ = Ω₄₂₀ Ω₁₀₁₃ / (2 Δ_m); throws std::invalid_argument for Δ_m = 0.
double two_photon_rabi(double omega_420, double omega_1013, double delta_m);

// R_b = (C₆/Ω₀)^{1/6} with both in the same angular units.
double blockade_radius(double c6, double omega0);

}  // namespace rydanneal::drive
