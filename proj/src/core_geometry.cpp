#include "arbelos/core_geometry.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "arbelos/error.hpp"

namespace arbelos {

using std::numbers::pi;

double knife_area(const ArbelosConfig& config) {
  const double T = config.chord();
  return pi * T * T / 4.0;
}

double chord_from_radii(double r1, double r2) {
  if (!(r1 >= 0.0) || !(r2 >= 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
    throw ArbelosError(ErrorKind::NegativeRadius,
                       "inscribed radii must be finite and nonnegative");
  }
  return 2.0 * std::sqrt(r1 * r2);
}

double chord_complement(const ArbelosConfig& config) {
  const double R = config.radius();
  const double T = config.chord();
  // T <= R is guaranteed, so the product is never negative.
  return std::sqrt((R - T) * (R + T));
}

namespace {

// (larger, smaller) inscribed radius.
std::pair<double, double> ordered_radii(const ArbelosConfig& config) {
  const double R = config.radius();
  const double T = config.chord();
  const double root = chord_complement(config);
  const double larger = (R + root) / 2.0;
  const double smaller = T * T / (2.0 * (R + root));
  return {larger, smaller};
}

}  // namespace

Radii radii_from_chord(const ArbelosConfig& config, Branch branch) {
  const auto [larger, smaller] = ordered_radii(config);
  if (branch == Branch::Plus) return {larger, smaller};
  return {smaller, larger};
}

SemicircleAreas semicircle_areas(const ArbelosConfig& config) {
  const auto [larger, smaller] = ordered_radii(config);
  // (pi/8)(R +- root)^2 == (pi/2) radius^2
  return {pi / 2.0 * larger * larger, pi / 2.0 * smaller * smaller};
}

AreaReport area_decomposition(const ArbelosConfig& config) {
  const double R = config.radius();
  const SemicircleAreas inner = semicircle_areas(config);
  return {pi * R * R / 2.0, inner.C1, inner.C2, knife_area(config)};
}

}  // namespace arbelos
