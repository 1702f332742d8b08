// units.hpp: SI constants and unit conversions used at module boundaries.
//
// Everything inside the physics modules is SI, with frequencies stored as
// angular frequencies (rad/s). Conversions to the units the scenarios report
// (MHz, nm, meV) live here.

#pragma once

#include <numbers>

namespace skyrmech::units {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double mu_bohr = 9.2740100783e-24;    // J/T
inline constexpr double epsilon0 = 8.8541878128e-12;   // F/m
inline constexpr double elementary_charge = 1.602176634e-19;
inline constexpr double mu0 = 1.25663706212e-6;        // N/A^2

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double femtofarad = 1e-15;
inline constexpr double mev = 1e-3 * elementary_charge;  // J

constexpr double hz_to_angular(double f) { return two_pi * f; }
constexpr double angular_to_hz(double omega) { return omega / two_pi; }
constexpr double mhz_to_angular(double f_mhz) { return two_pi * f_mhz * 1e6; }
constexpr double angular_to_mhz(double omega) { return omega / two_pi * 1e-6; }

/// Energy in joules to angular frequency (hbar = 1 inside the modules).
constexpr double joule_to_angular(double e) { return e / hbar; }
constexpr double mev_to_angular(double e_mev) { return e_mev * mev / hbar; }

}  // namespace skyrmech::units
