#include "paperhorn/svg_layout.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace paperhorn {

namespace {

double parse_length(std::string_view text, std::string_view whole) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(v > 0.0))
    throw std::invalid_argument(fmt::format("bad page size '{}': expected letter, a4 or WxH mm", whole));
  return v;
}

}  // namespace

PageSpec PageSpec::parse(std::string_view text) {
  if (text == "letter") return letter();
  if (text == "a4" || text == "A4") return a4();
  auto x = text.find_first_of("xX");
  if (x == std::string_view::npos)
    throw std::invalid_argument(fmt::format("bad page size '{}': expected letter, a4 or WxH mm", text));
  PageSpec spec;
  spec.width_mm = parse_length(text.substr(0, x), text);
  spec.height_mm = parse_length(text.substr(x + 1), text);
  if (!(spec.width_mm > 2 * spec.margin_mm && spec.height_mm > 2 * spec.margin_mm))
    throw std::invalid_argument(fmt::format("page '{}' is smaller than its margins", text));
  return spec;
}

Box PlacedTemplate::bounds() const {
  Box b = bounding_box(sector);
  return {b.min_x + translation.x, b.min_y + translation.y, b.max_x + translation.x,
          b.max_y + translation.y};
}

TemplateTooLarge::TemplateTooLarge(int index, double need_w, double need_h, double avail_w,
                                   double avail_h)
    : std::runtime_error(fmt::format(
          "TemplateTooLarge: template {} needs {:.1f} x {:.1f} mm but the page allows {:.1f} x "
          "{:.1f} mm; reduce the scale",
          index, need_w, need_h, avail_w, avail_h)),
      index_(index) {}

PageLayout layout(const std::vector<SectorTemplate>& templates, const PageSpec& page) {
  struct Shelf {
    double y;
    double height;
    double next_x;
  };
  struct PageState {
    std::vector<Shelf> shelves;
    double next_y;
  };

  const Box area = page.margin_box();
  std::vector<Box> boxes;
  boxes.reserve(templates.size());
  for (const auto& t : templates) {
    Box b = bounding_box(t);
    if (b.width() > area.width() || b.height() > area.height())
      throw TemplateTooLarge(t.index, b.width(), b.height(), area.width(), area.height());
    boxes.push_back(b);
  }

  std::vector<std::size_t> order(templates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return boxes[l].height() > boxes[r].height(); });

  PageLayout out;
  out.page = page;
  std::vector<PageState> states;

  auto place = [&](std::size_t page_index, double x, double y, std::size_t k) {
    const Box& b = boxes[k];
    out.pages[page_index].items.push_back({templates[k], {x - b.min_x, y - b.min_y}, 0.0});
  };

  for (std::size_t k : order) {
    double w = boxes[k].width();
    double h = boxes[k].height();
    bool placed = false;

    for (std::size_t p = 0; p < states.size() && !placed; ++p) {
      for (auto& shelf : states[p].shelves) {
        if (h <= shelf.height && shelf.next_x + w <= area.max_x) {
          place(p, shelf.next_x, shelf.y, k);
          shelf.next_x += w + kTemplateGap;
          placed = true;
          break;
        }
      }
    }
    for (std::size_t p = 0; p < states.size() && !placed; ++p) {
      if (states[p].next_y + h <= area.max_y) {
        states[p].shelves.push_back({states[p].next_y, h, area.min_x + w + kTemplateGap});
        place(p, area.min_x, states[p].next_y, k);
        states[p].next_y += h + kTemplateGap;
        placed = true;
      }
    }
    if (!placed) {
      states.push_back({{{area.min_y, h, area.min_x + w + kTemplateGap}}, area.min_y + h + kTemplateGap});
      out.pages.emplace_back();
      place(states.size() - 1, area.min_x, area.min_y, k);
    }
  }
  return out;
}

std::string format_number(double v) {
  std::string s = fmt::format("{:.6f}", v);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    auto last = s.find_last_not_of('0');
    s.erase(last == dot ? dot : last + 1);
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::string pt(Point p) { return format_number(p.x) + "," + format_number(p.y); }

Point shift(Point p, Point by) { return {p.x + by.x, p.y + by.y}; }

void emit_template(std::string& svg, const PlacedTemplate& placed) {
  const SectorTemplate& t = placed.sector;
  const Point at = placed.translation;
  const char* large = t.angle_deg > 180.0 ? "1" : "0";

  auto tab = tab_polygon(t);
  if (!tab.empty()) {
    std::string d = "M" + pt(shift(tab[0], at));
    for (std::size_t i = 1; i < tab.size(); ++i) d += " L" + pt(shift(tab[i], at));
    d += " Z";
    svg += fmt::format(
        "<path class=\"tab\" d=\"{}\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.2\"/>\n", d);
  }

  Point p1 = shift(edge_endpoint(t, TabEdge::First, t.radius_phys), at);
  Point p2 = shift(edge_endpoint(t, TabEdge::Second, t.radius_phys), at);
  std::string r = format_number(t.radius_phys);
  svg += fmt::format(
      "<path class=\"sector\" id=\"sector-{}\" d=\"M{} L{} A{},{} 0 {} 1 {} Z\" fill=\"{}\" "
      "stroke=\"#000000\" stroke-width=\"0.3\"/>\n",
      t.index, pt(at), pt(p1), r, r, large, pt(p2), t.fill_color.value_or("none"));

  if (t.cut_arc_radius_phys) {
    double rc = *t.cut_arc_radius_phys;
    Point c1 = shift(edge_endpoint(t, TabEdge::First, rc), at);
    Point c2 = shift(edge_endpoint(t, TabEdge::Second, rc), at);
    std::string rs = format_number(rc);
    svg += fmt::format(
        "<path class=\"cut\" d=\"M{} A{},{} 0 {} 1 {}\" fill=\"none\" stroke=\"#000000\" "
        "stroke-width=\"0.3\" stroke-dasharray=\"2,1.5\"/>\n",
        pt(c1), rs, rs, large, pt(c2));
  }

  Point label = shift(label_anchor(t), at);
  svg += fmt::format(
      "<text class=\"label\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"6\" "
      "text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>\n",
      format_number(label.x), format_number(label.y), t.label);
}

// 100 mm scale bar in the bottom margin, for checking print scaling.
void emit_ruler(std::string& svg, const PageSpec& page) {
  constexpr double kLength = 100.0;
  if (page.width_mm - 2 * page.margin_mm < kLength) return;
  double x0 = page.margin_mm;
  double y = page.height_mm - 0.5 * page.margin_mm;
  double tick = std::min(2.0, 0.25 * page.margin_mm);
  std::string d = fmt::format("M{} L{}", pt({x0, y}), pt({x0 + kLength, y}));
  for (int i = 0; i <= 10; ++i) {
    double x = x0 + 10.0 * i;
    double len = (i % 5 == 0) ? 2 * tick : tick;
    d += fmt::format(" M{} L{}", pt({x, y}), pt({x, y - len}));
  }
  svg += fmt::format(
      "<path class=\"ruler\" d=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.2\"/>\n", d);
  svg += fmt::format(
      "<text class=\"ruler-label\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"3\" "
      "dominant-baseline=\"middle\">100 mm</text>\n",
      format_number(x0 + kLength + 2.0), format_number(y));
}

}  // namespace

std::vector<std::string> emit_svg(const PageLayout& layout) {
  std::vector<std::string> docs;
  docs.reserve(layout.pages.size());
  const PageSpec& page = layout.page;
  const std::size_t total = layout.pages.size();

  for (std::size_t k = 0; k < total; ++k) {
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}mm\" "
        "height=\"{1}mm\" viewBox=\"0 0 {0} {1}\">\n",
        format_number(page.width_mm), format_number(page.height_mm));
    svg += fmt::format("<title>Cone templates, page {} of {}</title>\n", k + 1, total);
    svg += fmt::format(
        "<text class=\"instructions\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
        "font-size=\"3\" dominant-baseline=\"middle\">Page {} of {}. Cut on solid lines, glue each "
        "tab under the opposite edge, nest the cones in label order, trim at the dashed arc."
        "</text>\n",
        format_number(page.margin_mm), format_number(0.5 * page.margin_mm), k + 1, total);
    for (const auto& placed : layout.pages[k].items) emit_template(svg, placed);
    emit_ruler(svg, page);
    svg += "</svg>\n";
    docs.push_back(std::move(svg));
  }
  return docs;
}

}  // namespace paperhorn
