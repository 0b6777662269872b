#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paperhorn/band_planner.hpp"
#include "paperhorn/cone_geometry.hpp"

namespace paperhorn {

inline constexpr double kMillimetersPerInch = 25.4;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Box {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

enum class TabEdge { First, Second };

struct TabSpec {
  double width_phys = 6.0;  // mm
  TabEdge edge = TabEdge::Second;
};

/// An unrolled cone, in millimetres. In the template's local frame the apex
/// sits at the origin and the sector's bisector points along +y (SVG
/// orientation, y down). The first straight edge is at 90 - angle/2 degrees,
/// the second at 90 + angle/2, with angles increasing from +x towards +y.
struct SectorTemplate {
  int index = 0;
  double radius_phys = 0.0;
  double angle_deg = 0.0;
  std::string label;
  std::optional<TabSpec> tab;
  std::optional<double> cut_arc_radius_phys;
  std::optional<std::string> fill_color;
};

enum class ColorMode { Color, White };

struct TemplateOptions {
  ColorMode color_mode = ColorMode::Color;
  bool tabs = true;
  TabSpec tab;
};

/// Fill colours cycled over the templates in colour mode.
extern const std::array<const char*, 8> kBandPalette;

class OverhangTooLarge : public std::domain_error {
 public:
  OverhangTooLarge(double overhang, double limit);
};

SectorTemplate make_template(const ConeSpec& cone, double scale, const TemplateOptions& options = {});

/// Radial distance (mm) from the sector apex of the trim line that leaves
/// `axial_overhang` curve units of the cone showing past its tangent circle.
double cut_line_for_last(const ConeSpec& last_cone, double axial_overhang, double scale);

/// One template per cone, with the trim arc on the last one.
std::vector<SectorTemplate> make_templates(const BandPlan& plan, double scale,
                                           const TemplateOptions& options, double axial_overhang);

// Local-frame geometry.

double first_edge_angle_deg(const SectorTemplate& t);
double second_edge_angle_deg(const SectorTemplate& t);

/// Outer end of the first or second straight edge.
Point edge_endpoint(const SectorTemplate& t, TabEdge edge, double radius);

/// Glue tab outline, lying in the gap between the two straight edges. Empty
/// when the template has no tab or the gap leaves no room for one.
std::vector<Point> tab_polygon(const SectorTemplate& t);

/// Where the label goes: the area centroid of the sector.
Point label_anchor(const SectorTemplate& t);

/// Tight bounds of the sector plus its tab.
Box bounding_box(const SectorTemplate& t);

}  // namespace paperhorn
