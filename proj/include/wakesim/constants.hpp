#pragma once

#include <numbers>

namespace wakesim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kGravity = 9.81;             // m/s^2
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

}  // namespace wakesim
