#pragma once

// Boundary conversions. Everything inside the library is SI.

namespace softgrip::units {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kStandardGravity = 9.81;

constexpr double mm_to_m(double mm) { return mm / 1e3; }
constexpr double m_to_mm(double m) { return m * 1e3; }
constexpr double kpa_to_pa(double kpa) { return kpa * 1e3; }
constexpr double pa_to_kpa(double pa) { return pa / 1e3; }
constexpr double mpa_to_pa(double mpa) { return mpa * 1e6; }
constexpr double m2_to_mm2(double m2) { return m2 * 1e6; }

}  // namespace softgrip::units
