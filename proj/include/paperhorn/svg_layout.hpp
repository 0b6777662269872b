#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paperhorn/template_geometry.hpp"

namespace paperhorn {

struct PageSpec {
  double width_mm = 215.9;
  double height_mm = 279.4;
  double margin_mm = 12.7;

  static PageSpec letter() { return {215.9, 279.4, 12.7}; }
  static PageSpec a4() { return {210.0, 297.0, 12.7}; }

  /// "letter", "a4", or "<width>x<height>" in millimetres.
  static PageSpec parse(std::string_view text);

  Box margin_box() const { return {margin_mm, margin_mm, width_mm - margin_mm, height_mm - margin_mm}; }
};

struct PlacedTemplate {
  SectorTemplate sector;
  Point translation;  // page position of the sector apex
  double rotation_deg = 0.0;

  /// Page-space bounds.
  Box bounds() const;
};

struct Page {
  std::vector<PlacedTemplate> items;
};

struct PageLayout {
  PageSpec page;
  std::vector<Page> pages;
};

class TemplateTooLarge : public std::runtime_error {
 public:
  TemplateTooLarge(int index, double need_w, double need_h, double avail_w, double avail_h);
  int index() const { return index_; }

 private:
  int index_;
};

/// Clear space kept between neighbouring bounding boxes, mm.
inline constexpr double kTemplateGap = 4.0;

/// First-fit decreasing shelf packing by bounding-box height. Pages are
/// filled in order; a template goes on the first shelf (of any open page)
/// with room, then on a new shelf on the first page with vertical room,
/// then on a new page.
PageLayout layout(const std::vector<SectorTemplate>& templates, const PageSpec& page);

/// One standalone SVG document per page, in page order.
std::vector<std::string> emit_svg(const PageLayout& layout);

/// Fixed-point with six decimals, trailing zeros dropped.
std::string format_number(double v);

}  // namespace paperhorn
