#include "arbelos/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbelos/config.hpp"
#include "arbelos/construction.hpp"
#include "arbelos/core_geometry.hpp"
#include "arbelos/error.hpp"
#include "arbelos/numeric_oracle.hpp"
#include "arbelos/renormalization.hpp"
#include "arbelos/svg_render.hpp"

namespace arbelos::cli {

namespace {

enum class Format { Human, Json };

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// 17 significant digits round-trip every double.
std::string json_num(double v) { return fmt("%.17g", v); }
std::string human_num(double v) { return fmt("%.7g", v); }

// Minimal ordered JSON object writer; field order is part of the contract.
class JsonObject {
 public:
  JsonObject& num(const char* key, double v) { return raw(key, json_num(v)); }
  JsonObject& integer(const char* key, std::uint64_t v) {
    return raw(key, std::to_string(v));
  }
  JsonObject& str(const char* key, std::string_view v) {
    return raw(key, "\"" + std::string(v) + "\"");
  }
  JsonObject& boolean(const char* key, bool v) { return raw(key, v ? "true" : "false"); }
  JsonObject& raw(const char* key, const std::string& v) {
    body_ += (body_.empty() ? "\"" : ",\"") + std::string(key) + "\":" + v;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "]";
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
}

Format parse_format(const std::string& s) {
  return s == "json" ? Format::Json : Format::Human;
}

void line(std::ostream& out, const char* label, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%-12s", label);
  out << buf << " = " << human_num(v) << "\n";
}

int cmd_compute(double R, double T, Format format, std::ostream& out,
                std::ostream& err) {
  const ArbelosConfig config = validate_config(R, T);
  const AreaReport areas = area_decomposition(config);
  const DimensionlessState state = complete_state(normalize(config), Branch::Plus);
  const bool degenerate = config.chord() == 0.0;

  if (format == Format::Json) {
    out << JsonObject()
               .num("R", R)
               .num("T", T)
               .num("t", state.t)
               .num("r1", state.r1)
               .num("r2", state.r2)
               .num("area_C", areas.area_C)
               .num("area_C1", areas.area_C1)
               .num("area_C2", areas.area_C2)
               .num("area_knife", areas.area_knife)
               .str()
        << "\n";
    if (degenerate) err << "note: degenerate: C2 vanishes\n";
    return kExitOk;
  }
  line(out, "R", R);
  line(out, "T", T);
  line(out, "t", state.t);
  line(out, "r1", state.r1);
  line(out, "r2", state.r2);
  out << "branch       = plus\n";
  line(out, "area_C", areas.area_C);
  line(out, "area_C1", areas.area_C1);
  line(out, "area_C2", areas.area_C2);
  line(out, "area_knife", areas.area_knife);
  if (degenerate) out << "note: degenerate: C2 vanishes\n";
  return kExitOk;
}

int cmd_solve(double R, double T, const std::string& branch_name, Format format,
              std::ostream& out) {
  const Branch branch = branch_name == "minus" ? Branch::Minus : Branch::Plus;
  const Radii radii = radii_from_chord(validate_config(R, T), branch);
  if (format == Format::Json) {
    out << JsonObject()
               .num("R", R)
               .num("T", T)
               .str("branch", to_string(branch))
               .num("R1", radii.R1)
               .num("R2", radii.R2)
               .str()
        << "\n";
    return kExitOk;
  }
  line(out, "R1", radii.R1);
  line(out, "R2", radii.R2);
  out << "branch       = " << to_string(branch) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  double R = 0.0;
  double T = 0.0;
  std::string method = "mc";
  std::uint64_t samples = 1'000'000;
  std::uint32_t resolution = 1024;
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a, Format format, std::ostream& out) {
  const ArbelosConfig config = validate_config(a.R, a.T);
  OracleConfig oracle;
  oracle.method = a.method == "grid" ? OracleMethod::Grid : OracleMethod::MonteCarlo;
  oracle.samples = a.samples;
  oracle.grid_resolution = a.resolution;
  oracle.seed = a.seed;
  oracle.workers = a.workers;
  const VerificationReport report = verify_config(config, oracle);

  if (format == Format::Json) {
    std::vector<std::string> regions;
    for (const RegionCheck& c : report.regions) {
      regions.push_back(JsonObject()
                            .str("region", to_string(c.region))
                            .num("closed_form", c.closed_form)
                            .num("estimate", c.estimate.value)
                            .num("std_error", c.estimate.std_error)
                            .num("discrepancy", c.discrepancy)
                            .num("threshold", pass_threshold(c.estimate, oracle.method, a.R))
                            .boolean("pass", c.pass)
                            .str());
    }
    JsonObject obj;
    obj.num("R", a.R).num("T", a.T).str("method", a.method);
    if (oracle.method == OracleMethod::MonteCarlo) {
      obj.integer("samples", a.samples).integer("seed", a.seed);
    } else {
      obj.integer("resolution", a.resolution);
    }
    obj.raw("regions", json_array(regions)).boolean("pass", report.pass);
    out << obj.str() << "\n";
  } else {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-6s %14s %14s %14s %14s %14s  %s\n", "region",
                  "closed_form", "estimate", "std_error", "discrepancy", "threshold",
                  "result");
    out << buf;
    for (const RegionCheck& c : report.regions) {
      std::snprintf(buf, sizeof buf, "%-6s %14.7g %14.7g %14.7g %14.7g %14.7g  %s\n",
                    std::string(to_string(c.region)).c_str(), c.closed_form,
                    c.estimate.value, c.estimate.std_error, c.discrepancy,
                    pass_threshold(c.estimate, oracle.method, a.R),
                    c.pass ? "pass" : "FAIL");
      out << buf;
    }
    out << "overall: " << (report.pass ? "pass" : "FAIL") << "\n";
  }
  return report.pass ? kExitOk : kExitVerificationFailed;
}

struct RenderArgs {
  double R = 0.0;
  double n = 0.0;
  std::string out_path;
  RenderOptions options;
  bool no_labels = false;
};

int cmd_render(RenderArgs a, std::ostream& out, std::ostream& err) {
  a.options.show_labels = !a.no_labels;
  const std::string svg = render_figure(build_figure(a.R, a.n), a.options);
  if (a.out_path == "-") {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file || !(file << svg) || !file.flush()) {
    err << "error: cannot write " << a.out_path << "\n";
    return kExitUsage;
  }
  err << "wrote " << a.out_path << "\n";
  return kExitOk;
}

int cmd_sweep(int steps, Format format, std::ostream& out) {
  if (steps < 2) {
    throw ArbelosError(ErrorKind::InvalidOptions, "--steps must be >= 2");
  }
  std::vector<std::string> rows;
  if (format == Format::Human) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%12s %12s %12s %12s %12s %12s\n", "t", "r1", "r2",
                  "knife/R^2", "C1/R^2", "C2/R^2");
    out << buf;
  }
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const DimensionlessState s = complete_state(t, Branch::Plus);
    const DimensionlessAreas a = dimensionless_areas(s);
    if (format == Format::Json) {
      rows.push_back(JsonObject()
                         .num("t", s.t)
                         .num("r1", s.r1)
                         .num("r2", s.r2)
                         .num("a_knife", a.knife)
                         .num("a_C1", a.C1)
                         .num("a_C2", a.C2)
                         .str());
    } else {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%12.7g %12.7g %12.7g %12.7g %12.7g %12.7g\n", s.t,
                    s.r1, s.r2, a.knife, a.C1, a.C2);
      out << buf;
    }
  }
  if (format == Format::Json) {
    out << JsonObject()
               .integer("steps", static_cast<std::uint64_t>(steps))
               .raw("rows", json_array(rows))
               .str()
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arbelos (shoemaker's knife) areas, radii and numerical checks", "arbelos"};
  app.require_subcommand(1);

  std::string format = "human";

  double R = 0.0, T = 0.0;
  std::string branch = "plus";

  auto* compute = app.add_subcommand("compute", "Areas of C, C1, C2 and the knife");
  compute->add_option("--R", R, "Circumscribing radius")->required();
  compute->add_option("--T", T, "Chord length PN")->required();
  add_format(compute, format);

  auto* solve = app.add_subcommand("solve", "Inscribed radii from R and T");
  solve->add_option("--R", R, "Circumscribing radius")->required();
  solve->add_option("--T", T, "Chord length PN")->required();
  solve->add_option("--branch", branch, "Which root goes to R1")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  add_format(solve, format);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check closed forms against a numerical oracle");
  verify->add_option("--R", va.R, "Circumscribing radius")->required();
  verify->add_option("--T", va.T, "Chord length PN")->required();
  verify->add_option("--method", va.method, "mc or grid")
      ->check(CLI::IsMember({"mc", "grid"}))
      ->capture_default_str();
  verify->add_option("--samples", va.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--resolution", va.resolution, "Grid cells per axis")
      ->check(CLI::Range(2u, 1u << 16))
      ->capture_default_str();
  verify->add_option("--seed", va.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--workers", va.workers, "Worker threads, 0 = all cores")
      ->capture_default_str();
  add_format(verify, format);

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Write an SVG of the construction");
  render->add_option("--R", ra.R, "Circumscribing radius")->required();
  render->add_option("--n", ra.n, "Signed offset of N from the center")->required();
  render->add_option("--out", ra.out_path, "Output file, '-' for stdout")->required();
  render->add_flag("--shade", ra.options.shade_knife, "Fill the knife region");
  render->add_flag("--no-labels", ra.no_labels, "Omit point labels");
  render->add_option("--width", ra.options.canvas_width, "Canvas width in px")
      ->capture_default_str();
  render->add_option("--margin", ra.options.margin, "Margin in px")->capture_default_str();
  render->add_option("--stroke", ra.options.stroke_width, "Stroke width in px")
      ->capture_default_str();

  int steps = 10;
  auto* sweep = app.add_subcommand("sweep", "Tabulate dimensionless radii and areas over t");
  sweep->add_option("--steps", steps, "Number of intervals on [0, 1]")->capture_default_str();
  add_format(sweep, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format f = parse_format(format);
    if (*compute) return cmd_compute(R, T, f, out, err);
    if (*solve) return cmd_solve(R, T, branch, f, out);
    if (*verify) return cmd_verify(va, f, out);
    if (*render) return cmd_render(ra, out, err);
    if (*sweep) return cmd_sweep(steps, f, out);
  } catch (const ArbelosError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace arbelos::cli
