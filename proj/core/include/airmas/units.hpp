#pragma once

#include <cmath>
#include <numbers>

namespace airmas {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

// Normalize an angle to (-pi, pi].
inline double wrap_pi(double a) {
  double r = std::remainder(a, two_pi);
  if (r <= -pi) r += two_pi;
  return r;
}

}  // namespace airmas
