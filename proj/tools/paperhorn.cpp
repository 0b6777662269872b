// Command-line front end: builds cone templates and reports for a curve.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "paperhorn/run.hpp"

int main(int argc, char** argv) {
  paperhorn::RunConfig config;
  std::string outdir = config.outdir.string();
  std::string color = "color";
  std::string tabs = "on";

  CLI::App app{"Paper cone templates for a surface of revolution"};
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.add_option("--curve", config.curve, "'reciprocal' or \"f=<expr>; df=<expr>[; end=<x>]\"")
      ->capture_default_str();
  app.add_option("--start", config.start_x, "first tangent point")->capture_default_str();
  app.add_option("--spacing", config.band_spacing, "arc length between tangent points")
      ->capture_default_str();
  app.add_option("--count", config.count, "number of cones")->capture_default_str();
  app.add_option("--scale", config.scale_mm_per_unit, "millimetres per curve unit")
      ->capture_default_str();
  app.add_option("--page", config.page, "letter, a4, or WxH in mm")->capture_default_str();
  app.add_option("--color", color, "color or white")
      ->check(CLI::IsMember({"color", "white"}))
      ->capture_default_str();
  app.add_option("--tabs", tabs, "glue tabs on or off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_option("--overhang", config.overhang, "axial length of the last cone to keep, curve units")
      ->capture_default_str();
  app.add_option("--out", outdir, "output directory")->capture_default_str();
  app.add_flag("--report-only", config.report_only, "write the reports but no SVG pages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "paperhorn: config failed: " << e.what() << '\n';
    return 1;
  }

  config.outdir = outdir;
  config.color_mode = color == "white" ? paperhorn::ColorMode::White : paperhorn::ColorMode::Color;
  config.tabs = tabs == "on";
  return paperhorn::run(config, std::cout, std::cerr);
}
