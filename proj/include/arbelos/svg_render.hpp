#pragma once

#include <string>

#include "arbelos/construction.hpp"

namespace arbelos {

struct RenderOptions {
  double canvas_width = 800.0;
  double margin = 40.0;
  bool shade_knife = false;
  bool show_labels = true;
  double stroke_width = 2.0;
};

/// Maps the y-up model frame onto the y-down canvas:
///   x_px = margin + (x + R) * scale,  y_px = margin + (R - y) * scale
/// with scale = (canvas_width - 2 margin) / (2R).
struct ViewTransform {
  double radius = 1.0;
  double margin = 0.0;
  double scale = 1.0;

  static ViewTransform fit(double radius, const RenderOptions& options);

  Point to_canvas(const Point& p) const;
  Point to_model(const Point& p) const;
  double canvas_height() const { return radius * scale + 2 * margin; }
  double canvas_width() const { return 2 * radius * scale + 2 * margin; }
};

/// Standalone SVG 1.1 document for the figure. Output is byte-deterministic:
/// every number is written with six decimals. Arcs of radius below 1e-9 R are
/// omitted. Throws InvalidOptions unless canvas_width > 2 margin and
/// stroke_width > 0.
std::string render_figure(const Figure& figure, const RenderOptions& options = {});

}  // namespace arbelos
