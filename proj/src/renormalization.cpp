#include "arbelos/renormalization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "arbelos/error.hpp"
#include "arbelos/tolerance.hpp"

namespace arbelos {

using std::numbers::pi;

namespace {

// sqrt(1 - t^2), with the near-zero radicand clamp.
double unit_complement(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    std::ostringstream msg;
    msg << "ratio t must lie in [0, 1], got " << t;
    throw ArbelosError(ErrorKind::ParameterOutOfRange, msg.str());
  }
  const double radicand = (1.0 - t) * (1.0 + t);
  if (radicand < -kRadicandSlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ratio t must lie in [0, 1], got " << t;
    throw ArbelosError(ErrorKind::ParameterOutOfRange, msg.str());
  }
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

struct Roots {
  double larger;
  double smaller;
};

Roots unit_roots(double t) {
  const double root = unit_complement(t);
  const double tc = std::fmin(t, 1.0);
  return {(1.0 + root) / 2.0, tc * tc / (2.0 * (1.0 + root))};
}

void check_ratio(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1], got " << value;
    throw ArbelosError(ErrorKind::ParameterOutOfRange, msg.str());
  }
}

}  // namespace

double normalize(const ArbelosConfig& config) {
  return config.chord() / config.radius();
}

double solve_r1(double t, Branch branch) {
  const Roots roots = unit_roots(t);
  return branch == Branch::Plus ? roots.larger : roots.smaller;
}

DimensionlessState complete_state(double t, Branch branch) {
  const Roots roots = unit_roots(t);
  const double tc = std::fmin(t, 1.0);
  if (branch == Branch::Plus) return {tc, roots.larger, roots.smaller};
  return {tc, roots.smaller, roots.larger};
}

Denormalized denormalize(const DimensionlessState& state, double radius) {
  check_ratio(state.t, "t");
  check_ratio(state.r1, "r1");
  check_ratio(state.r2, "r2");
  // validate_config reports a bad radius; t <= 1 keeps t * R <= R.
  const ArbelosConfig config = validate_config(radius, state.t * radius);
  return {config, Radii{state.r1 * radius, state.r2 * radius}};
}

double knife_area_ratio(double t) { return pi * t * t / 4.0; }

DimensionlessAreas dimensionless_areas(const DimensionlessState& state) {
  return {knife_area_ratio(state.t), pi / 2.0 * state.r1 * state.r1,
          pi / 2.0 * state.r2 * state.r2};
}

}  // namespace arbelos
