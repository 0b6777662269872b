// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Usage: paperhorn_acceptance <path to paperhorn executable>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "paperhorn/band_planner.hpp"
#include "paperhorn/report.hpp"
#include "paperhorn/svg_layout.hpp"
#include "paperhorn/template_geometry.hpp"

using namespace paperhorn;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome closed_form_equivalence() {
  Outcome o;
  auto t0 = Clock::now();
  Curve r = builtin_reciprocal();
  double worst_apex = 0.0, worst_angle = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    double a = 0.5 * std::pow(100.0, static_cast<double>(i) / (n - 1));  // 0.5 .. 50
    ConeSpec c = cone_at(r, a, 1);
    worst_apex = std::max(worst_apex, std::abs(c.apex_x - 2 * a) / (2 * a));
    double closed = 360.0 / std::sqrt(a * a * a * a + 1);
    worst_angle = std::max(worst_angle, std::abs(c.sector_angle_deg - closed) / closed);
  }
  double elapsed = seconds_since(t0);
  o.require(worst_apex <= 1e-12, fmt::format("apex rel err {:.3g}", worst_apex));
  o.require(worst_angle <= 1e-9, fmt::format("angle rel err {:.3g}", worst_angle));
  o.require(elapsed < 1.0, fmt::format("took {:.3f} s", elapsed));
  if (o.pass)
    o.detail = fmt::format("max rel err apex {:.2g}, angle {:.2g}; {:.3f} s", worst_apex, worst_angle,
                           elapsed);
  return o;
}

Outcome seventeen_solves() {
  Outcome o;
  auto t0 = Clock::now();
  BandPlan plan = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  o.require(plan.tangent_points.size() == 18, "plan does not have 18 points");
  o.require(plan.tangent_points.front() == 0.5, "first point is not 0.5");
  double worst = 0.0;
  for (std::size_t i = 1; i < plan.tangent_points.size(); ++i) {
    o.require(plan.tangent_points[i] > plan.tangent_points[i - 1],
              fmt::format("point {} not increasing", i));
    double length = oracle::reciprocal_arc_length(0.5, plan.tangent_points[i]);
    worst = std::max(worst, std::abs(length - 0.25 * static_cast<double>(i)));
  }
  double elapsed = seconds_since(t0);
  o.require(worst <= 1e-8, fmt::format("oracle arc-length err {:.3g}", worst));
  o.require(elapsed < 10.0, fmt::format("took {:.3f} s", elapsed));
  if (o.pass)
    o.detail = fmt::format("a17 = {:.10f}, max oracle err {:.2g}; {:.3f} s", plan.tangent_points.back(),
                           worst, elapsed);
  return o;
}

Outcome paradox_desk_scale() {
  Outcome o;
  auto t0 = Clock::now();
  Curve r = builtin_reciprocal();
  const double two_pi = 2 * std::numbers::pi;
  double prev_area = 0.0;
  std::string summary;
  for (double T : {10.0, 100.0, 1000.0}) {
    double v = volume_of_revolution(r, 0.5, T);
    double area = lateral_area_of_revolution(r, 0.5, T);
    double closed = std::numbers::pi * (2.0 - 1.0 / T);
    o.require(std::abs(v - closed) <= 1e-8, fmt::format("volume at T={} off by {:.3g}", T, v - closed));
    o.require(v < two_pi, fmt::format("volume at T={} not below 2 pi", T));
    o.require(area > two_pi * std::log(2 * T) - 1e-8, fmt::format("area at T={} below log bound", T));
    if (prev_area > 0.0)
      o.require(area - prev_area > two_pi * std::log(10.0) - 1e-6,
                fmt::format("area growth into T={} too small", T));
    prev_area = area;
    summary += fmt::format(" T={}: V={:.9f} A={:.6f};", T, v, area);
  }
  double elapsed = seconds_since(t0);
  o.require(elapsed < 5.0, fmt::format("took {:.3f} s", elapsed));
  if (o.pass) o.detail = fmt::format("{} {:.3f} s", summary.substr(1), elapsed);
  return o;
}

Outcome unrolling_isometry() {
  Outcome o;
  BandPlan plan = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  double worst = 0.0;
  for (const auto& c : plan.cones) {
    double arc = c.sector_angle_deg * std::numbers::pi / 180.0 * c.slant;
    double circumference = 2 * std::numbers::pi * c.base_radius;
    worst = std::max(worst, std::abs(arc - circumference) / circumference);
  }
  o.require(worst <= 1e-9, fmt::format("rel err {:.3g}", worst));
  if (o.pass) o.detail = fmt::format("18 cones, max rel err {:.2g}", worst);
  return o;
}

Outcome numerics_properties() {
  Outcome o;
  Curve r = builtin_reciprocal();
  QuadratureSettings q;
  RootSettings rs;
  std::mt19937 rng(20261015);
  std::uniform_real_distribution<double> u(0.5, 60.0);

  double worst_add = 0.0, worst_lower = 0.0, worst_identity = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    double p[3] = {u(rng), u(rng), u(rng)};
    std::sort(std::begin(p), std::end(p));
    double whole = arc_length(r, p[0], p[2], q);
    double split = arc_length(r, p[0], p[1], q) + arc_length(r, p[1], p[2], q);
    worst_add = std::max(worst_add, std::abs(whole - split));
    worst_lower = std::max(worst_lower, (p[2] - p[0]) - whole);
  }
  o.require(worst_add <= 10 * q.abs_tol, fmt::format("additivity err {:.3g}", worst_add));
  o.require(worst_lower <= 0.0, fmt::format("lower bound violated by {:.3g}", worst_lower));

  auto h = [&](double a) { return arc_length(r, 0.5, a, q); };
  std::uniform_real_distribution<double> targets(0.0, 40.0);
  for (int trial = 0; trial < 50; ++trial) {
    double target = targets(rng);
    double x = solve_increasing(h, target, 0.5, rs);
    worst_identity = std::max(worst_identity, std::abs(h(x) - target));
  }
  o.require(worst_identity <= rs.f_tol, fmt::format("solve identity err {:.3g}", worst_identity));

  BandPlan coarse = plan_bands(r, 0.5, 0.25, 18);
  BandPlan fine = plan_bands(r, 0.5, 0.125, 35);
  double worst_nest = 0.0;
  for (std::size_t i = 0; i < coarse.tangent_points.size(); ++i)
    worst_nest = std::max(worst_nest, std::abs(fine.tangent_points[2 * i] - coarse.tangent_points[i]));
  o.require(worst_nest <= 1e-8, fmt::format("nesting err {:.3g}", worst_nest));

  if (o.pass)
    o.detail = fmt::format("additivity {:.2g}, lower-bound ok, solve identity {:.2g}, nesting {:.2g}",
                           worst_add, worst_identity, worst_nest);
  return o;
}

Outcome svg_round_trip() {
  Outcome o;
  BandPlan plan = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  auto templates = make_templates(plan, kMillimetersPerInch, {}, 0.25);
  PageSpec page = PageSpec::letter();
  auto docs = emit_svg(layout(templates, page));

  std::map<int, const SectorTemplate*> by_index;
  for (const auto& t : templates) by_index[t.index] = &t;
  double worst_r = 0.0, worst_a = 0.0;
  std::size_t parsed = 0;
  for (const auto& svg : docs) {
    for (const auto& s : oracle::parse_sectors(svg)) {
      auto it = by_index.find(s.index);
      if (it == by_index.end()) {
        o.require(false, fmt::format("unknown sector {}", s.index));
        continue;
      }
      worst_r = std::max(worst_r, std::abs(s.radius() - it->second->radius_phys) / it->second->radius_phys);
      worst_a = std::max(worst_a, std::abs(s.angle_deg() - it->second->angle_deg) / it->second->angle_deg);
      ++parsed;
    }
    auto coords = oracle::page_coordinates(svg);
    for (double x : coords.xs) o.require(x >= 0.0 && x <= page.width_mm, fmt::format("x = {} off page", x));
    for (double y : coords.ys) o.require(y >= 0.0 && y <= page.height_mm, fmt::format("y = {} off page", y));
  }
  o.require(parsed == 18, fmt::format("parsed {} sectors, expected 18", parsed));
  o.require(worst_r <= 1e-6, fmt::format("radius rel err {:.3g}", worst_r));
  o.require(worst_a <= 1e-6, fmt::format("angle rel err {:.3g}", worst_a));
  o.require(docs == emit_svg(layout(make_templates(plan, kMillimetersPerInch, {}, 0.25), page)),
            "emission not byte-deterministic");
  if (o.pass)
    o.detail = fmt::format("{} pages, 18 sectors, max rel err radius {:.2g}, angle {:.2g}", docs.size(),
                           worst_r, worst_a);
  return o;
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    files[fs::relative(entry.path(), root).string()] = ss.str();
  }
  return files;
}

Outcome end_to_end(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  auto base = fs::temp_directory_path() / "paperhorn_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);

  auto t0 = Clock::now();
  std::vector<std::map<std::string, std::string>> trees;
  for (const char* name : {"run1", "run2"}) {
    fs::path dir = base / name;
    std::string cmd = fmt::format("\"{}\" --out \"{}\" > \"{}\"", cli, dir.string(),
                                  (base / (std::string(name) + ".log")).string());
    int status = std::system(cmd.c_str());
    o.require(status == 0, fmt::format("{} exited with status {}", name, status));
    trees.push_back(read_tree(dir));
  }
  double elapsed = seconds_since(t0);

  const auto& tree = trees[0];
  o.require(tree.count("page_1.svg") == 1, "no page_1.svg");
  for (const char* f : {"bands.csv", "paradox.csv", "notes.txt"})
    o.require(tree.count(f) == 1, fmt::format("missing {}", f));
  o.require(trees[0] == trees[1], "runs differ");
  o.require(elapsed < 15.0, fmt::format("took {:.3f} s", elapsed));
  if (o.pass) o.detail = fmt::format("{} files, identical across runs; {:.3f} s", tree.size(), elapsed);
  fs::remove_all(base);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 closed-form equivalence", closed_form_equivalence},
      {"2 seventeen-solve reproduction", seventeen_solves},
      {"3 paradox at desk scale", paradox_desk_scale},
      {"4 unrolling isometry", unrolling_isometry},
      {"5 numerics properties", numerics_properties},
      {"6 svg round-trip", svg_round_trip},
      {"7 end-to-end determinism", [&] { return end_to_end(cli); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = fmt::format("threw: {}", e.what());
    }
    std::cout << fmt::format("[{}] {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
    if (!o.pass) ++failed;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
