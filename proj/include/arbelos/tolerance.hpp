#pragma once

#include <algorithm>
#include <cmath>

namespace arbelos {

// Identity checks: relative tolerance scaled by the larger magnitude, with an
// absolute floor for values near zero.
inline constexpr double kRelativeTolerance = 1e-12;
inline constexpr double kAbsoluteFloor = 1e-15;

// Radicands of R^2 - T^2 (or 1 - t^2) down to -kRadicandSlack * R^2 are
// treated as rounding noise and clamped to zero.
inline constexpr double kRadicandSlack = 1e-12;

inline bool approx_equal(double a, double b, double rel = kRelativeTolerance,
                         double abs_floor = kAbsoluteFloor) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= std::max(rel * scale, abs_floor);
}

/// Same as approx_equal, but the relative tolerance is taken against an
/// explicit reference magnitude (e.g. the largest term of a sum).
inline bool approx_equal_scaled(double a, double b, double reference,
                                double rel = kRelativeTolerance,
                                double abs_floor = kAbsoluteFloor) {
  const double scale =
      std::max({std::fabs(a), std::fabs(b), std::fabs(reference)});
  return std::fabs(a - b) <= std::max(rel * scale, abs_floor);
}

}  // namespace arbelos
