#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "arbelos/config.hpp"
#include "arbelos/construction.hpp"
#include "arbelos/core_geometry.hpp"
#include "arbelos/error.hpp"
#include "arbelos/numeric_oracle.hpp"
#include "arbelos/renormalization.hpp"
#include "arbelos/svg_render.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace arbelos;

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        Arbelos areas, dimensionless radii, coordinate construction,
        numerical area oracle and SVG rendering.
    )pbdoc";

  auto error = py::register_exception<ArbelosError>(m, "ArbelosError", PyExc_ValueError);
  (void)error;

  py::enum_<Branch>(m, "Branch")
      .value("Plus", Branch::Plus)
      .value("Minus", Branch::Minus);

  py::class_<ArbelosConfig>(m, "ArbelosConfig")
      .def(py::init(&validate_config), py::arg("R"), py::arg("T"))
      .def_property_readonly("R", &ArbelosConfig::radius)
      .def_property_readonly("T", &ArbelosConfig::chord)
      .def("__repr__", [](const ArbelosConfig& c) {
        return "ArbelosConfig(R=" + std::to_string(c.radius()) +
               ", T=" + std::to_string(c.chord()) + ")";
      });
  m.def("validate_config", &validate_config, py::arg("R"), py::arg("T"));

  py::class_<Radii>(m, "Radii")
      .def_readonly("R1", &Radii::R1)
      .def_readonly("R2", &Radii::R2);

  py::class_<AreaReport>(m, "AreaReport")
      .def_readonly("area_C", &AreaReport::area_C)
      .def_readonly("area_C1", &AreaReport::area_C1)
      .def_readonly("area_C2", &AreaReport::area_C2)
      .def_readonly("area_knife", &AreaReport::area_knife);

  m.def("knife_area", &knife_area, py::arg("config"));
  m.def("chord_from_radii", &chord_from_radii, py::arg("R1"), py::arg("R2"));
  m.def("radii_from_chord", &radii_from_chord, py::arg("config"),
        py::arg("branch") = Branch::Plus);
  m.def("semicircle_areas", [](const ArbelosConfig& c) {
    const SemicircleAreas a = semicircle_areas(c);
    return py::make_tuple(a.C1, a.C2);
  }, py::arg("config"));
  m.def("area_decomposition", &area_decomposition, py::arg("config"));

  py::class_<DimensionlessState>(m, "DimensionlessState")
      .def(py::init<>())
      .def(py::init([](double t, double r1, double r2) {
             return DimensionlessState{t, r1, r2};
           }),
           py::arg("t"), py::arg("r1"), py::arg("r2"))
      .def_readwrite("t", &DimensionlessState::t)
      .def_readwrite("r1", &DimensionlessState::r1)
      .def_readwrite("r2", &DimensionlessState::r2);

  m.def("normalize", &normalize, py::arg("config"));
  m.def("solve_r1", &solve_r1, py::arg("t"), py::arg("branch") = Branch::Plus);
  m.def("complete_state", &complete_state, py::arg("t"),
        py::arg("branch") = Branch::Plus);
  m.def("denormalize", [](const DimensionlessState& s, double R) {
    const Denormalized d = denormalize(s, R);
    return py::make_tuple(d.config, d.radii);
  }, py::arg("state"), py::arg("R"));
  m.def("knife_area_ratio", &knife_area_ratio, py::arg("t"));

  py::class_<Point>(m, "Point")
      .def(py::init([](double x, double y) { return Point{x, y}; }), py::arg("x"),
           py::arg("y"))
      .def(py::init([](const std::tuple<double, double>& xy) {
        return Point{std::get<0>(xy), std::get<1>(xy)};
      }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__iter__", [](const Point& p) {
        return py::iter(py::make_tuple(p.x, p.y));
      });
  py::implicitly_convertible<py::tuple, Point>();

  py::class_<Figure>(m, "Figure")
      .def_readonly("A", &Figure::A)
      .def_readonly("B", &Figure::B)
      .def_readonly("N", &Figure::N)
      .def_readonly("P", &Figure::P)
      .def_readonly("O", &Figure::O)
      .def_readonly("R", &Figure::R)
      .def_readonly("R1", &Figure::R1)
      .def_readonly("R2", &Figure::R2)
      .def_readonly("T", &Figure::T);

  py::enum_<Semicircle>(m, "Semicircle")
      .value("C", Semicircle::C)
      .value("C1", Semicircle::C1)
      .value("C2", Semicircle::C2);

  m.def("build_figure", &build_figure, py::arg("R"), py::arg("n"));
  m.def("verify_right_angle", &verify_right_angle, py::arg("figure"));
  m.def("verify_geometric_mean", &verify_geometric_mean, py::arg("figure"));
  m.def("in_knife", &in_knife, py::arg("p"), py::arg("figure"));
  m.def("in_semicircle", &in_semicircle, py::arg("p"), py::arg("which"),
        py::arg("figure"));

  py::enum_<OracleMethod>(m, "OracleMethod")
      .value("MonteCarlo", OracleMethod::MonteCarlo)
      .value("Grid", OracleMethod::Grid);

  py::class_<OracleConfig>(m, "OracleConfig")
      .def(py::init([](OracleMethod method, std::uint64_t samples,
                       std::uint32_t grid_resolution, std::uint64_t seed) {
             OracleConfig c;
             c.method = method;
             c.samples = samples;
             c.grid_resolution = grid_resolution;
             c.seed = seed;
             return c;
           }),
           py::arg("method") = OracleMethod::MonteCarlo, py::arg("samples") = 1'000'000,
           py::arg("grid_resolution") = 1024, py::arg("seed") = 0)
      .def_readwrite("method", &OracleConfig::method)
      .def_readwrite("samples", &OracleConfig::samples)
      .def_readwrite("grid_resolution", &OracleConfig::grid_resolution)
      .def_readwrite("seed", &OracleConfig::seed);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("std_error", &Estimate::std_error);

  // Python callables hold the GIL, so the oracle runs them on one worker.
  m.def("estimate_area",
        [](const std::function<bool(double, double)>& predicate,
           std::tuple<double, double, double, double> box, OracleConfig config) {
          config.workers = 1;
          const auto [x0, x1, y0, y1] = box;
          return estimate_area([&](const Point& p) { return predicate(p.x, p.y); },
                               Box{x0, x1, y0, y1}, config);
        },
        py::arg("predicate"), py::arg("box"), py::arg("config"),
        "box is (x_min, x_max, y_min, y_max); predicate(x, y) -> bool");

  py::enum_<Region>(m, "Region")
      .value("Knife", Region::Knife)
      .value("C1", Region::C1)
      .value("C2", Region::C2)
      .value("C", Region::C);

  py::class_<RegionCheck>(m, "RegionCheck")
      .def_readonly("region", &RegionCheck::region)
      .def_readonly("closed_form", &RegionCheck::closed_form)
      .def_readonly("estimate", &RegionCheck::estimate)
      .def_readonly("discrepancy", &RegionCheck::discrepancy)
      .def_readonly("passed", &RegionCheck::pass);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("regions", &VerificationReport::regions)
      .def_readonly("passed", &VerificationReport::pass);

  m.def("verify_config", &verify_config, py::arg("config"), py::arg("oracle"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<RenderOptions>(m, "RenderOptions")
      .def(py::init<>())
      .def_readwrite("canvas_width", &RenderOptions::canvas_width)
      .def_readwrite("margin", &RenderOptions::margin)
      .def_readwrite("shade_knife", &RenderOptions::shade_knife)
      .def_readwrite("show_labels", &RenderOptions::show_labels)
      .def_readwrite("stroke_width", &RenderOptions::stroke_width);

  m.def("render_figure", &render_figure, py::arg("figure"),
        py::arg("options") = RenderOptions{});

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
