// bezout: intersection cycles of plane curves over Q.
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bezout/bezout.hpp"
#include "report.hpp"

namespace {

using namespace bezout;
using bezout::cli::Style;

enum Exit { kOk = 0, kUsage = 1, kCommon = 2, kInternal = 3 };

struct Common {
  std::string a, b;
  bool affine = false;
  bool json = false;
  unsigned precision = 30;
  std::uint64_t seed = 1;
};

void add_curves(CLI::App* cmd, Common& c) {
  cmd->add_option("A", c.a, "first curve, e.g. \"y^2*z - x^3\"")->required();
  cmd->add_option("B", c.b, "second curve")->required();
  cmd->add_flag("--affine", c.affine, "homogenize each input to its own total degree");
}

MPoly parse_named(const std::string& name, const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw UsageError(name + ": " + e.what() + "\n  " + text + "\n  " + std::string(e.offset(), ' ') + "^");
  }
}

IntersectionResult compute(const Common& c, DivisionStrategy strategy = DivisionStrategy::FractionField) {
  const MPoly a = parse_named("A", c.a), b = parse_named("B", c.b);
  return intersect_curves(a, b, {c.affine, strategy});
}

std::optional<std::vector<ApproxPoint>> points_for(const IntersectionResult& r, unsigned precision) {
  return unpack(r.cycle, {precision, 200}, std::make_pair(r.a, r.b));
}

int run_intersect(const Common& c, bool points, bool verify, const std::string& strategy, const Style& st) {
  const auto r = compute(c, strategy == "pseudo" ? DivisionStrategy::Pseudo : DivisionStrategy::FractionField);
  std::optional<std::vector<ApproxPoint>> pts;
  if (points) pts = points_for(r, c.precision);
  std::optional<cli::VerifyOutcome> v;
  if (verify) v = cli::run_verification(r, c.seed);
  if (c.json)
    std::cout << cli::json_report(r, pts, v).dump(2) << "\n";
  else
    std::cout << cli::text_report(r, pts, v, c.precision, st);
  return v && !v->ok() ? kInternal : kOk;
}

int run_plot(const Common& c, const std::string& slice, const std::string& range, const std::string& out, int grid) {
  const auto r = compute(c);
  PlotInput in{r.a.poly(), r.b.poly(), parse_slice(slice), parse_range(range), grid, {}};
  if (grid < 2 || grid > 8192) throw UsageError("--grid must be between 2 and 8192");
  if (!r.cycle.empty()) in.points = unpack(r.cycle, {c.precision, 200});
  const PlotResult p = render_svg(in);
  for (const auto& w : p.warnings) std::cerr << "warning: " << w << "\n";
  if (out.empty() || out == "-") {
    std::cout << p.svg;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out + "'");
    f << p.svg;
    std::cerr << "wrote " << out << " (" << p.markers.size() << " marker" << (p.markers.size() == 1 ? "" : "s")
              << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection cycles of projective plane curves over Q"};
  app.require_subcommand(1);
  Style st;
  st.colour = std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));

  Common c;
  bool points = false, verify = false;
  std::string strategy = "fraction";
  auto* inter = app.add_subcommand("intersect", "print the intersection cycle");
  add_curves(inter, c);
  inter->add_flag("--json", c.json, "JSON output");
  inter->add_flag("--points", points, "append numerically unpacked points");
  inter->add_flag("--verify", verify, "run the Bezout, membership and resultant checks");
  inter->add_option("--precision", c.precision, "decimal digits for --points")->check(CLI::Range(5u, 1000u));
  inter->add_option("--seed", c.seed, "seed for the resultant check");
  inter->add_option("--strategy", strategy, "division: fraction or pseudo")
      ->check(CLI::IsMember({"fraction", "pseudo"}));

  auto* pts = app.add_subcommand("points", "print the cycle and its points");
  add_curves(pts, c);
  pts->add_flag("--json", c.json, "JSON output");
  pts->add_option("--precision", c.precision, "decimal digits")->check(CLI::Range(5u, 1000u));

  auto* ver = app.add_subcommand("verify", "check an intersection against independent tests");
  add_curves(ver, c);
  ver->add_flag("--json", c.json, "JSON output");
  ver->add_option("--seed", c.seed, "seed for the coordinate change");

  std::string slice = "z=1", range = "-2:2:-2:2", out;
  int grid = 512;
  auto* plot = app.add_subcommand("plot", "draw a real affine slice as SVG");
  add_curves(plot, c);
  plot->add_option("--slice", slice, "z=1, y=1 or x=1")->check(CLI::IsMember({"z=1", "y=1", "x=1"}));
  plot->add_option("--range", range, "umin:umax:vmin:vmax");
  plot->add_option("--out", out, "output file (stdout if omitted)");
  plot->add_option("--grid", grid, "cells per side");
  plot->add_option("--precision", c.precision, "decimal digits for point markers")->check(CLI::Range(5u, 1000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*inter) return run_intersect(c, points, verify, strategy, st);
    if (*pts) return run_intersect(c, true, false, "fraction", st);
    if (*ver) return run_intersect(c, false, true, "fraction", st);
    if (*plot) return run_plot(c, slice, range, out, grid);
  } catch (const CommonComponentError& e) {
    std::cerr << e.what() << "\n";
    return kCommon;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
