#pragma once

#include "arbelos/config.hpp"

namespace arbelos {

/// Lengths rescaled by R: t = T/R, r1 = R1/R, r2 = R2/R.
struct DimensionlessState {
  double t = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

struct Denormalized {
  ArbelosConfig config;
  Radii radii;
};

/// Areas divided by R^2.
struct DimensionlessAreas {
  double knife = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
};

/// t = T / R, in [0, 1].
double normalize(const ArbelosConfig& config);

/// Root of 4 r (1 - r) = t^2 on the requested branch.
///
/// Plus returns (1 + sqrt(1 - t^2)) / 2. Minus returns the algebraically equal
/// t^2 / (2 (1 + sqrt(1 - t^2))) rather than (1 - sqrt(1 - t^2)) / 2, which
/// cancels to zero for small t. A t marginally above 1 (radicand within
/// kRadicandSlack of zero) is accepted and treated as 1; anything else
/// outside [0, 1] throws ArbelosError(ParameterOutOfRange).
double solve_r1(double t, Branch branch = Branch::Plus);

/// (t, r1, r2) with r1 from solve_r1 and r2 the other root. Both roots come
/// from the same radical, so r1 + r2 == 1 to within an ulp or two.
DimensionlessState complete_state(double t, Branch branch = Branch::Plus);

/// Rescales a state by R. Throws NonPositiveRadius for a bad R and
/// ParameterOutOfRange for a state whose ratios leave [0, 1].
Denormalized denormalize(const DimensionlessState& state, double radius);

/// pi t^2 / 4, so that knife area = knife_area_ratio(t) * R^2.
double knife_area_ratio(double t);

DimensionlessAreas dimensionless_areas(const DimensionlessState& state);

}  // namespace arbelos
