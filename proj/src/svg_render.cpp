#include "arbelos/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "arbelos/error.hpp"

namespace arbelos {

ViewTransform ViewTransform::fit(double radius, const RenderOptions& options) {
  return {radius, options.margin,
          (options.canvas_width - 2.0 * options.margin) / (2.0 * radius)};
}

Point ViewTransform::to_canvas(const Point& p) const {
  return {margin + (p.x + radius) * scale, margin + (radius - p.y) * scale};
}

Point ViewTransform::to_model(const Point& p) const {
  return {(p.x - margin) / scale - radius, radius - (p.y - margin) / scale};
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Arc {
  const char* id;
  Point left;   // model coordinates
  Point right;
  double radius;
};

// Upper semicircular arc from `from` to `to`. Left-to-right over the top is
// clockwise on the y-down canvas (sweep 1), right-to-left is sweep 0.
std::string arc_command(const ViewTransform& view, double radius, const Point& to,
                        bool left_to_right) {
  const Point q = view.to_canvas(to);
  const std::string r = num(radius * view.scale);
  return "A " + r + " " + r + " 0 0 " + (left_to_right ? "1 " : "0 ") + num(q.x) +
         " " + num(q.y);
}

std::string move_to(const ViewTransform& view, const Point& p) {
  const Point q = view.to_canvas(p);
  return "M " + num(q.x) + " " + num(q.y);
}

void append_line(std::string& out, const char* id, const ViewTransform& view,
                 const Point& a, const Point& b) {
  const Point p = view.to_canvas(a);
  const Point q = view.to_canvas(b);
  out += "    <line class=\"segment\" id=\"" + std::string(id) + "\" x1=\"" +
         num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" +
         num(q.y) + "\"/>\n";
}

struct Label {
  const char* text;
  Point at;
  double dx;
  double dy;
};

}  // namespace

std::string render_figure(const Figure& figure, const RenderOptions& options) {
  if (!std::isfinite(options.canvas_width) || !std::isfinite(options.margin) ||
      options.margin < 0.0 || !(options.canvas_width > 2.0 * options.margin)) {
    throw ArbelosError(ErrorKind::InvalidOptions,
                       "canvas_width must exceed twice the margin");
  }
  if (!std::isfinite(options.stroke_width) || !(options.stroke_width > 0.0)) {
    throw ArbelosError(ErrorKind::InvalidOptions, "stroke_width must be positive");
  }

  const ViewTransform view = ViewTransform::fit(figure.R, options);
  const double min_radius = 1e-9 * figure.R;
  const Arc arcs[] = {
      {"arc-C", figure.A, figure.B, figure.R},
      {"arc-C1", figure.A, figure.N, figure.R1},
      {"arc-C2", figure.N, figure.B, figure.R2},
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(view.canvas_width()) + "\" height=\"" + num(view.canvas_height()) +
         "\" viewBox=\"0 0 " + num(view.canvas_width()) + " " +
         num(view.canvas_height()) + "\">\n";

  if (options.shade_knife) {
    // Outer arc A -> B, then back over C2 (B -> N) and C1 (N -> A).
    std::string d = move_to(view, figure.A) + " " +
                    arc_command(view, figure.R, figure.B, true);
    if (figure.R2 >= min_radius) d += " " + arc_command(view, figure.R2, figure.N, false);
    if (figure.R1 >= min_radius) d += " " + arc_command(view, figure.R1, figure.A, false);
    d += " Z";
    out += "  <path class=\"knife\" d=\"" + d +
           "\" fill=\"#d8d8d8\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
  }

  out += "  <g fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
         num(options.stroke_width) + "\">\n";
  for (const Arc& arc : arcs) {
    if (arc.radius < min_radius) continue;
    out += "    <path class=\"arc\" id=\"" + std::string(arc.id) + "\" d=\"" +
           move_to(view, arc.left) + " " + arc_command(view, arc.radius, arc.right, true) +
           "\"/>\n";
  }
  append_line(out, "seg-AB", view, figure.A, figure.B);
  append_line(out, "seg-PN", view, figure.P, figure.N);
  out += "  </g>\n";

  if (options.show_labels) {
    const Label labels[] = {
        {"A", figure.A, -6.0, 18.0}, {"B", figure.B, 6.0, 18.0},
        {"N", figure.N, 6.0, 18.0},  {"O", figure.O, -6.0, 18.0},
        {"P", figure.P, 6.0, -8.0},
    };
    out += "  <g class=\"labels\" font-family=\"serif\" font-size=\"16\" "
           "fill=\"#000000\">\n";
    for (const Label& label : labels) {
      const Point q = view.to_canvas(label.at);
      out += "    <circle cx=\"" + num(q.x) + "\" cy=\"" + num(q.y) + "\" r=\"3\"/>\n";
      out += "    <text id=\"label-" + std::string(label.text) + "\" x=\"" + num(q.x) +
             "\" y=\"" + num(q.y) + "\" dx=\"" + num(label.dx) + "\" dy=\"" +
             num(label.dy) + "\" text-anchor=\"middle\">" + label.text + "</text>\n";
    }
    out += "  </g>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace arbelos
