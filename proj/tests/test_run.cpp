#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "paperhorn/expression.hpp"
#include "paperhorn/run.hpp"

using namespace paperhorn;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const char* name) {
  auto dir = fs::temp_directory_path() / "paperhorn_run_test" / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("make_curve") {
  auto builtin = make_curve("reciprocal", 0.5);
  CHECK(builtin.explicit_domain);
  CHECK(is_builtin_reciprocal(builtin.curve));

  auto line = make_curve("f=2-x; df=-1", 0.0);
  CHECK_FALSE(line.explicit_domain);
  CHECK(line.curve.f(0.5) == 1.5);
  CHECK(line.curve.df(0.5) == -1.0);
  CHECK(line.curve.domain_start == 0.0);

  auto bounded = make_curve(" f = 1/x ; df = -1/x^2 ; end = 20 ", 1.0);
  CHECK(bounded.explicit_domain);
  CHECK(bounded.curve.domain_end == 20.0);

  CHECK_THROWS_AS(make_curve("f=1/x", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_curve("f=1/x; df=-1/x^2; end=0.5", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_curve("f=1/(; df=1", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_curve("g=1", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_curve("parabola", 1.0), std::invalid_argument);
}

TEST_CASE("default run writes pages and reports") {
  RunConfig config;
  config.outdir = scratch("default");
  std::ostringstream out, err;
  REQUIRE(run(config, out, err) == 0);
  CHECK(err.str().empty());
  CHECK(fs::exists(config.outdir / "page_1.svg"));
  CHECK(count_lines(slurp(config.outdir / "bands.csv")) == 19);
  CHECK(count_lines(slurp(config.outdir / "paradox.csv")) == 4);
  CHECK(fs::exists(config.outdir / "notes.txt"));
  CHECK(out.str().find("wrote ") == 0);
}

TEST_CASE("count 1 gives one page with one sector") {
  RunConfig config;
  config.count = 1;
  config.outdir = scratch("one");
  std::ostringstream out, err;
  REQUIRE(run(config, out, err) == 0);
  CHECK(fs::exists(config.outdir / "page_1.svg"));
  CHECK_FALSE(fs::exists(config.outdir / "page_2.svg"));
  CHECK(count_lines(slurp(config.outdir / "bands.csv")) == 2);
  auto svg = slurp(config.outdir / "page_1.svg");
  CHECK(svg.find("id=\"sector-1\"") != std::string::npos);
  CHECK(svg.find("id=\"sector-2\"") == std::string::npos);
}

TEST_CASE("stale pages from a longer run are removed") {
  RunConfig config;
  config.outdir = scratch("stale");
  std::ostringstream out, err;
  REQUIRE(run(config, out, err) == 0);
  REQUIRE(fs::exists(config.outdir / "page_2.svg"));
  config.count = 1;
  REQUIRE(run(config, out, err) == 0);
  CHECK_FALSE(fs::exists(config.outdir / "page_2.svg"));
}

TEST_CASE("expression curve run") {
  RunConfig config;
  config.curve = "f=2-x; df=-1";
  config.start_x = 0.0;
  config.band_spacing = 0.70710678;
  config.count = 2;
  config.outdir = scratch("line");
  std::ostringstream out, err;
  REQUIRE(run(config, out, err) == 0);
  auto bands = slurp(config.outdir / "bands.csv");
  CHECK(bands.find("\n1,0,2,2,") != std::string::npos);
  CHECK(bands.find("\n2,0.499999999,1.5,2,") != std::string::npos);
}

TEST_CASE("report-only skips pages") {
  RunConfig config;
  config.report_only = true;
  config.outdir = scratch("report_only");
  std::ostringstream out, err;
  REQUIRE(run(config, out, err) == 0);
  CHECK_FALSE(fs::exists(config.outdir / "page_1.svg"));
  CHECK(fs::exists(config.outdir / "bands.csv"));
}

TEST_CASE("failures name their stage and exit 1") {
  auto failing = [](RunConfig config, const char* stage) {
    std::ostringstream out, err;
    CHECK(run(config, out, err) == 1);
    CHECK_MESSAGE(err.str().find(stage) != std::string::npos, err.str());
    CHECK(count_lines(err.str()) == 1);
  };
  RunConfig base;
  base.outdir = scratch("fail");

  RunConfig c = base;
  c.count = 0;
  failing(c, "config failed");

  c = base;
  c.page = "tabloid";
  failing(c, "config failed");

  c = base;
  c.curve = "f=sin(x)+2; df=cos(x); end=3";
  c.start_x = 0.0;
  failing(c, "curve validation failed: MonotonicityViolation");

  c = base;
  c.curve = "f=2-x; df=-1";
  c.start_x = 0.0;
  c.count = 5;
  c.band_spacing = 1.0;
  failing(c, "curve validation failed: PositivityViolation");

  c = base;
  c.curve = "f=2-x; df=-1; end=1";
  c.start_x = 0.0;
  c.count = 4;
  c.band_spacing = 0.6;
  failing(c, "solve failed: band 3");

  c = base;
  c.scale_mm_per_unit = 200.0;
  failing(c, "layout failed: TemplateTooLarge");

  c = base;
  c.overhang = 50.0;
  failing(c, "templates failed: OverhangTooLarge");

  c = base;
  c.outdir = "/proc/paperhorn_cannot_write_here";
  failing(c, "I/O failed");
}
