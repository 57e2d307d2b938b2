#pragma once

namespace arbelos {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Coordinate realization of the arbelos. The diameter AB lies on the x-axis
/// with O at the origin and A on the left; N = (n, 0) and P sits on the outer
/// semicircle directly above N.
struct Figure {
  Point A;
  Point B;
  Point N;
  Point P;
  Point O;
  double R = 0.0;
  double R1 = 0.0;  // radius of the semicircle on AN
  double R2 = 0.0;  // radius of the semicircle on NB
  double T = 0.0;   // |PN|

  Point center_C1() const { return {(A.x + N.x) / 2, 0.0}; }
  Point center_C2() const { return {(N.x + B.x) / 2, 0.0}; }
};

enum class Semicircle { C, C1, C2 };

/// Throws NonPositiveRadius unless R is finite and positive, PointOffDiameter
/// unless -R <= n <= R.
Figure build_figure(double radius, double n);

/// |angle APB - pi/2| in radians. Throws DegenerateTriangle when P coincides
/// with A or B.
double verify_right_angle(const Figure& figure);

/// |T^2 - |AN| |NB||.
double verify_geometric_mean(const Figure& figure);

// Membership is strict: the boundary belongs to no open region.
bool in_semicircle(const Point& p, Semicircle which, const Figure& figure);
bool in_knife(const Point& p, const Figure& figure);

}  // namespace arbelos
