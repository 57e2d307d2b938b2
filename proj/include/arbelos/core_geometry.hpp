#pragma once

#include "arbelos/config.hpp"

namespace arbelos {

struct SemicircleAreas {
  double C1 = 0.0;  // the larger of the two
  double C2 = 0.0;
};

struct AreaReport {
  double area_C = 0.0;
  double area_C1 = 0.0;
  double area_C2 = 0.0;
  double area_knife = 0.0;
};

/// Area of the knife region, pi T^2 / 4. Depends on T only.
double knife_area(const ArbelosConfig& config);

/// Chord length 2 sqrt(R1 R2) implied by two inscribed radii.
/// Throws ArbelosError(NegativeRadius) for a negative or non-finite radius.
double chord_from_radii(double r1, double r2);

/// sqrt(R^2 - T^2), evaluated as sqrt((R - T)(R + T)).
double chord_complement(const ArbelosConfig& config);

/// Inscribed radii recovered from (R, T). Plus puts (R + sqrt(R^2-T^2))/2 in
/// R1; Minus swaps. The smaller radius uses T^2 / (2 (R + sqrt(R^2-T^2))),
/// which stays accurate as T -> 0.
Radii radii_from_chord(const ArbelosConfig& config, Branch branch = Branch::Plus);

/// Areas (pi/8)(R +- sqrt(R^2-T^2))^2 of the inscribed semicircles, larger
/// first.
SemicircleAreas semicircle_areas(const ArbelosConfig& config);

/// All four areas. area_C1 + area_C2 + area_knife == area_C up to rounding.
AreaReport area_decomposition(const ArbelosConfig& config);

}  // namespace arbelos
