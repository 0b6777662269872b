#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "paperhorn/curve.hpp"
#include "paperhorn/template_geometry.hpp"

namespace paperhorn {

struct RunConfig {
  /// "reciprocal", or "f=<expr>; df=<expr>[; end=<number>]" with expressions in x.
  std::string curve = "reciprocal";
  double start_x = 0.5;
  double band_spacing = 0.25;
  int count = 18;
  double scale_mm_per_unit = kMillimetersPerInch;
  std::string page = "letter";
  ColorMode color_mode = ColorMode::Color;
  bool tabs = true;
  double overhang = 0.25;
  std::filesystem::path outdir = "out";
  bool report_only = false;
};

/// A curve built from a RunConfig curve string.
struct CurveChoice {
  Curve curve;
  /// False for expression curves given without an end; those are checked
  /// only over the span the plan actually uses.
  bool explicit_domain = true;
};

/// Throws std::invalid_argument or ParseError.
CurveChoice make_curve(const std::string& spec, double start_x);

/// Plans, builds templates and pages, and writes everything under
/// config.outdir. Summaries go to `out`, a single diagnostic to `err`.
/// Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace paperhorn
