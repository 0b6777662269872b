#include "paperhorn/report.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <fmt/format.h>

namespace paperhorn {

namespace {

void check_range(const Curve& curve, double x0, double T, const char* who) {
  if (!(curve.domain_start <= x0 && x0 <= T))
    throw std::invalid_argument(fmt::format("{}: need domain_start <= x0 <= T", who));
  if (!curve.unbounded() && !(T < curve.domain_end))
    throw std::invalid_argument(fmt::format("{}: T outside curve domain", who));
}

}  // namespace

double volume_of_revolution(const Curve& curve, double x0, double T,
                            const QuadratureSettings& settings) {
  check_range(curve, x0, T, "volume_of_revolution");
  const auto& f = curve.f;
  return std::numbers::pi * integrate(
                                [&f](double x) {
                                  double y = f(x);
                                  return y * y;
                                },
                                x0, T, settings);
}

double lateral_area_of_revolution(const Curve& curve, double x0, double T,
                                  const QuadratureSettings& settings) {
  check_range(curve, x0, T, "lateral_area_of_revolution");
  const auto& f = curve.f;
  const auto& df = curve.df;
  return 2.0 * std::numbers::pi * integrate(
                                      [&](double x) {
                                        double s = df(x);
                                        return f(x) * std::sqrt(1.0 + s * s);
                                      },
                                      x0, T, settings);
}

ParadoxReport paradox_at(const Curve& curve, double x0, double T,
                         const QuadratureSettings& settings) {
  ParadoxReport r;
  r.truncation_T = T;
  r.volume = volume_of_revolution(curve, x0, T, settings);
  r.lateral_area = lateral_area_of_revolution(curve, x0, T, settings);
  if (is_builtin_reciprocal(curve)) {
    r.volume_closed_form = std::numbers::pi * (1.0 / x0 - 1.0 / T);
    r.area_lower_bound = 2.0 * std::numbers::pi * std::log(T / x0);
  } else {
    r.area_lower_bound = 2.0 * std::numbers::pi * integrate(curve.f, x0, T, settings);
  }
  return r;
}

std::vector<ParadoxReport> paradox_ladder(const Curve& curve, double x0,
                                          std::span<const double> truncations,
                                          const QuadratureSettings& settings) {
  std::vector<ParadoxReport> rows;
  for (double T : truncations) {
    if (!curve.unbounded() && !(T < curve.domain_end)) continue;
    rows.push_back(paradox_at(curve, x0, T, settings));
  }
  return rows;
}

std::string bands_csv(const BandPlan& plan) {
  std::string out = "index,a,base_radius,apex_x,slant,sector_angle_deg\n";
  for (const auto& c : plan.cones)
    out += fmt::format("{},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g}\n", c.index, c.a, c.base_radius,
                       c.apex_x, c.slant, c.sector_angle_deg);
  return out;
}

std::string paradox_csv(std::span<const ParadoxReport> rows) {
  std::string out = "T,volume,volume_closed_form,lateral_area,area_lower_bound\n";
  for (const auto& r : rows) {
    std::string closed = r.volume_closed_form ? fmt::format("{:.9g}", *r.volume_closed_form) : "";
    out += fmt::format("{:.9g},{:.9g},{},{:.9g},{:.9g}\n", r.truncation_T, r.volume, closed,
                       r.lateral_area, r.area_lower_bound);
  }
  return out;
}

std::string notes_text(const BandPlan& plan) {
  std::string out;
  out += "Slant height\n";
  out += "------------\n";
  out += "The tangent line at (a, f(a)) meets the axis at apex_x = a - f(a)/f'(a).\n";
  out += "The cone's slant height is the hypotenuse of the right triangle with legs\n";
  out += "apex_x - a and f(a). For f(x) = 1/x the legs are a and 1/a, so\n\n";
  out += "    slant = sqrt(a^2 + 1/a^2)      (used here)\n";
  out += "    slant = sqrt(a^2 - 1/a^2)      (sign variant, not used)\n\n";
  out += "Only the plus sign gives the sector angle 360/sqrt(a^4 + 1) degrees, which\n";
  out += "is what arc = base circumference requires: angle = 360 * f(a) / slant.\n";
  out += "The minus-sign form is also undefined for a < 1, including a = 0.5.\n\n";
  out += "Tangent points\n";
  out += "--------------\n";
  out += fmt::format("curve {}, start {:.17g}, spacing {:.17g} along the curve, {} cones\n",
                     plan.curve_name, plan.start_x, plan.band_spacing, plan.count);
  for (std::size_t i = 0; i < plan.tangent_points.size(); ++i)
    out += fmt::format("  a[{}] = {:.17g}   arc length {:.17g}\n", i, plan.tangent_points[i],
                       static_cast<double>(i) * plan.band_spacing);
  return out;
}

ReportFiles render_report(const BandPlan& plan, std::span<const ParadoxReport> paradox) {
  return {bands_csv(plan), paradox_csv(paradox), notes_text(plan)};
}

ReportIoError::ReportIoError(const std::filesystem::path& path)
    : std::runtime_error(fmt::format("cannot write {}", path.string())) {}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportIoError(path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw ReportIoError(path);
}

std::vector<std::filesystem::path> write_report(const BandPlan& plan,
                                                std::span<const ParadoxReport> paradox,
                                                const std::filesystem::path& outdir) {
  ReportFiles files = render_report(plan, paradox);
  std::vector<std::filesystem::path> written = {outdir / "bands.csv", outdir / "paradox.csv",
                                                outdir / "notes.txt"};
  write_file(written[0], files.bands);
  write_file(written[1], files.paradox);
  write_file(written[2], files.notes);
  return written;
}

}  // namespace paperhorn
