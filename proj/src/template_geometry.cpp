#include "paperhorn/template_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace paperhorn {

const std::array<const char*, 8> kBandPalette = {
    "#e6194b", "#f58231", "#ffe119", "#3cb44b", "#42d4f4", "#4363d8", "#911eb4", "#f032e6",
};

namespace {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

Point polar(double radius, double angle_deg) {
  double t = deg_to_rad(angle_deg);
  return {radius * std::cos(t), radius * std::sin(t)};
}

// True when direction `angle_deg` lies within the sector's angular span.
bool within_span(const SectorTemplate& t, double angle_deg) {
  double from = first_edge_angle_deg(t);
  double rel = std::fmod(angle_deg - from, 360.0);
  if (rel < 0.0) rel += 360.0;
  return rel <= t.angle_deg;
}

}  // namespace

OverhangTooLarge::OverhangTooLarge(double overhang, double limit)
    : std::domain_error(fmt::format(
          "OverhangTooLarge: overhang {:.9g} reaches the apex (distance {:.9g})", overhang, limit)) {}

SectorTemplate make_template(const ConeSpec& cone, double scale, const TemplateOptions& options) {
  if (!(scale > 0.0)) throw std::invalid_argument("make_template: scale must be > 0");
  SectorTemplate t;
  t.index = cone.index;
  t.radius_phys = cone.slant * scale;
  t.angle_deg = cone.sector_angle_deg;
  t.label = std::to_string(cone.index);
  if (options.tabs) t.tab = options.tab;
  if (options.color_mode == ColorMode::Color) {
    auto slot = static_cast<std::size_t>(std::max(cone.index - 1, 0)) % kBandPalette.size();
    t.fill_color = kBandPalette[slot];
  }
  return t;
}

double cut_line_for_last(const ConeSpec& last_cone, double axial_overhang, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("cut_line_for_last: scale must be > 0");
  if (!(axial_overhang > 0.0))
    throw std::invalid_argument("cut_line_for_last: overhang must be > 0");
  double run = last_cone.apex_x - last_cone.a;
  if (!(axial_overhang < run)) throw OverhangTooLarge(axial_overhang, run);
  // Similar triangles along the lateral line from the apex.
  double remaining = last_cone.apex_x - (last_cone.a + axial_overhang);
  return last_cone.slant * remaining / run * scale;
}

std::vector<SectorTemplate> make_templates(const BandPlan& plan, double scale,
                                           const TemplateOptions& options, double axial_overhang) {
  std::vector<SectorTemplate> out;
  out.reserve(plan.cones.size());
  for (const auto& cone : plan.cones) out.push_back(make_template(cone, scale, options));
  if (!out.empty())
    out.back().cut_arc_radius_phys = cut_line_for_last(plan.cones.back(), axial_overhang, scale);
  return out;
}

double first_edge_angle_deg(const SectorTemplate& t) { return 90.0 - 0.5 * t.angle_deg; }
double second_edge_angle_deg(const SectorTemplate& t) { return 90.0 + 0.5 * t.angle_deg; }

Point edge_endpoint(const SectorTemplate& t, TabEdge edge, double radius) {
  return polar(radius, edge == TabEdge::First ? first_edge_angle_deg(t) : second_edge_angle_deg(t));
}

std::vector<Point> tab_polygon(const SectorTemplate& t) {
  if (!t.tab) return {};
  double w = t.tab->width_phys;
  double gap_deg = 360.0 - t.angle_deg;
  // Chamfered 45 degrees at the outer end; near the apex the tab starts late
  // enough that its outer edge stays clear of the opposite straight edge.
  double outer_start = w;
  if (gap_deg < 90.0) outer_start = std::max(w, w / std::tan(deg_to_rad(gap_deg)));
  double inner_start = outer_start - w;
  double outer_end = t.radius_phys - w;
  if (!(outer_end > outer_start)) return {};

  bool second = t.tab->edge == TabEdge::Second;
  double along = second ? second_edge_angle_deg(t) : first_edge_angle_deg(t);
  double outward = along + (second ? 90.0 : -90.0);
  Point offset = polar(w, outward);
  auto on_edge = [&](double d) { return polar(d, along); };
  auto shifted = [&](double d) {
    Point p = on_edge(d);
    return Point{p.x + offset.x, p.y + offset.y};
  };
  return {on_edge(inner_start), on_edge(t.radius_phys), shifted(outer_end), shifted(outer_start)};
}

Point label_anchor(const SectorTemplate& t) {
  double half = deg_to_rad(0.5 * t.angle_deg);
  double dist = 2.0 * t.radius_phys * std::sin(half) / (3.0 * half);
  return {0.0, dist};
}

Box bounding_box(const SectorTemplate& t) {
  Box box;  // the apex, at the origin
  auto grow = [&box](Point p) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  };
  grow(edge_endpoint(t, TabEdge::First, t.radius_phys));
  grow(edge_endpoint(t, TabEdge::Second, t.radius_phys));
  for (double axis : {0.0, 90.0, 180.0, 270.0})
    if (within_span(t, axis)) grow(polar(t.radius_phys, axis));
  for (Point p : tab_polygon(t)) grow(p);
  return box;
}

}  // namespace paperhorn
