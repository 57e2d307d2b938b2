#include "arbelos/config.hpp"

#include <cmath>
#include <sstream>

#include "arbelos/error.hpp"

namespace arbelos {

ArbelosConfig validate_config(double radius, double chord) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    std::ostringstream msg;
    msg << "radius R must be finite and positive, got " << radius;
    throw ArbelosError(ErrorKind::NonPositiveRadius, msg.str());
  }
  if (!std::isfinite(chord) || chord < 0.0 || chord > radius) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "chord T must satisfy 0 <= T <= R, got T = " << chord
        << " with R = " << radius;
    throw ArbelosError(ErrorKind::ChordOutOfRange, msg.str());
  }
  return ArbelosConfig(radius, chord);
}

const char* to_string(Branch branch) noexcept {
  return branch == Branch::Plus ? "plus" : "minus";
}

}  // namespace arbelos
