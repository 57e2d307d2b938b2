#pragma once

namespace arbelos {

/// A validated problem instance: circumscribing radius R and chord length T
/// (the perpendicular PN from the diameter to the outer semicircle).
///
/// Only validate_config() creates one, so holding an ArbelosConfig means
/// R > 0 and 0 <= T <= R.
class ArbelosConfig {
 public:
  double radius() const noexcept { return radius_; }
  double chord() const noexcept { return chord_; }

  friend bool operator==(const ArbelosConfig&, const ArbelosConfig&) = default;

 private:
  ArbelosConfig(double radius, double chord) : radius_(radius), chord_(chord) {}
  friend ArbelosConfig validate_config(double radius, double chord);

  double radius_;
  double chord_;
};

/// Throws ArbelosError(NonPositiveRadius) unless R is finite and positive,
/// ArbelosError(ChordOutOfRange) unless T is finite and 0 <= T <= R.
ArbelosConfig validate_config(double radius, double chord);

/// Which root of 4 r (1 - r) = t^2 is assigned to the first (A-side) radius.
/// Plus takes the larger root.
enum class Branch { Plus, Minus };

const char* to_string(Branch branch) noexcept;

/// Radii of the two inscribed semicircles, R1 on the A side.
struct Radii {
  double R1 = 0.0;
  double R2 = 0.0;
};

}  // namespace arbelos
