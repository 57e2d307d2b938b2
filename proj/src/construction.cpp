#include "arbelos/construction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "arbelos/error.hpp"

namespace arbelos {

Figure build_figure(double radius, double n) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    std::ostringstream msg;
    msg << "radius R must be finite and positive, got " << radius;
    throw ArbelosError(ErrorKind::NonPositiveRadius, msg.str());
  }
  if (!std::isfinite(n) || n < -radius || n > radius) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "N must lie on the diameter, |n| <= R; got n = " << n
        << " with R = " << radius;
    throw ArbelosError(ErrorKind::PointOffDiameter, msg.str());
  }

  Figure f;
  f.R = radius;
  f.O = {0.0, 0.0};
  f.A = {-radius, 0.0};
  f.B = {radius, 0.0};
  f.N = {n, 0.0};
  f.T = std::sqrt((radius - n) * (radius + n));
  f.P = {n, f.T};
  f.R1 = (n + radius) / 2.0;
  f.R2 = (radius - n) / 2.0;
  return f;
}

double verify_right_angle(const Figure& figure) {
  const double ax = figure.A.x - figure.P.x, ay = figure.A.y - figure.P.y;
  const double bx = figure.B.x - figure.P.x, by = figure.B.y - figure.P.y;
  const double eps = 1e-12 * figure.R;
  if (std::hypot(ax, ay) <= eps || std::hypot(bx, by) <= eps) {
    throw ArbelosError(ErrorKind::DegenerateTriangle,
                       "P coincides with an endpoint of the diameter");
  }
  const double dot = ax * bx + ay * by;
  const double cross = ax * by - ay * bx;
  const double angle = std::atan2(std::fabs(cross), dot);
  return std::fabs(angle - std::numbers::pi / 2.0);
}

double verify_geometric_mean(const Figure& figure) {
  const double an = std::hypot(figure.N.x - figure.A.x, figure.N.y - figure.A.y);
  const double nb = std::hypot(figure.B.x - figure.N.x, figure.B.y - figure.N.y);
  const double pn = std::hypot(figure.P.x - figure.N.x, figure.P.y - figure.N.y);
  return std::fabs(pn * pn - an * nb);
}

namespace {

bool strictly_inside(const Point& p, const Point& center, double r) {
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  return dx * dx + dy * dy < r * r;
}

}  // namespace

bool in_semicircle(const Point& p, Semicircle which, const Figure& figure) {
  if (!(p.y > 0.0)) return false;
  switch (which) {
    case Semicircle::C: return strictly_inside(p, figure.O, figure.R);
    case Semicircle::C1: return strictly_inside(p, figure.center_C1(), figure.R1);
    case Semicircle::C2: return strictly_inside(p, figure.center_C2(), figure.R2);
  }
  return false;
}

bool in_knife(const Point& p, const Figure& figure) {
  if (!in_semicircle(p, Semicircle::C, figure)) return false;
  const auto outside = [&p](const Point& c, double r) {
    const double dx = p.x - c.x;
    const double dy = p.y - c.y;
    return dx * dx + dy * dy > r * r;
  };
  return outside(figure.center_C1(), figure.R1) &&
         outside(figure.center_C2(), figure.R2);
}

}  // namespace arbelos
