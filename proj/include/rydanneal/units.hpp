#pragma once

#include <numbers>

// Frequencies enter the program as ordinary frequencies in MHz (the "/2π"
// values quoted for Rabi frequencies, detunings and interaction
// coefficients). Everything past the parsing boundary works in angular
// units: rad/μs for frequencies, μs for time, μm for length. These two
// functions are the only place the factor 2π is applied.
namespace rydanneal::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// MHz -> rad/μs
constexpr double angular_from_mhz(double mhz) { return kTwoPi * mhz; }

// rad/μs -> MHz
constexpr double mhz_from_angular(double rad_per_us) { return rad_per_us / kTwoPi; }

// GHz·μm^k -> rad/μs·μm^k (interaction coefficients)
constexpr double angular_from_ghz(double ghz) { return kTwoPi * 1.0e3 * ghz; }

constexpr double ghz_from_angular(double rad_per_us) { return rad_per_us / (kTwoPi * 1.0e3); }

}  // namespace rydanneal::units
