#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paperhorn/band_planner.hpp"
#include "paperhorn/curve.hpp"
#include "paperhorn/numerics.hpp"

namespace paperhorn {

/// Volume and lateral area of the surface truncated at x = T.
struct ParadoxReport {
  double truncation_T = 0.0;
  double volume = 0.0;
  std::optional<double> volume_closed_form;  // known only for the builtin reciprocal
  double lateral_area = 0.0;
  double area_lower_bound = 0.0;  // 2 pi * integral of f, since sqrt(1 + df^2) >= 1
};

/// pi * integral of f^2 over [x0, T].
double volume_of_revolution(const Curve& curve, double x0, double T,
                            const QuadratureSettings& settings = {});

/// 2 pi * integral of f * sqrt(1 + df^2) over [x0, T].
double lateral_area_of_revolution(const Curve& curve, double x0, double T,
                                  const QuadratureSettings& settings = {});

ParadoxReport paradox_at(const Curve& curve, double x0, double T,
                         const QuadratureSettings& settings = {});

inline const std::vector<double> kDefaultTruncations = {10.0, 100.0, 1000.0};

std::vector<ParadoxReport> paradox_ladder(const Curve& curve, double x0,
                                          std::span<const double> truncations,
                                          const QuadratureSettings& settings = {});

/// index,a,base_radius,apex_x,slant,sector_angle_deg with 9 significant digits.
std::string bands_csv(const BandPlan& plan);

std::string paradox_csv(std::span<const ParadoxReport> rows);

/// Fixed notes: the slant-height convention and the tangent points at full precision.
std::string notes_text(const BandPlan& plan);

struct ReportFiles {
  std::string bands;
  std::string paradox;
  std::string notes;
};

ReportFiles render_report(const BandPlan& plan, std::span<const ParadoxReport> paradox);

class ReportIoError : public std::runtime_error {
 public:
  explicit ReportIoError(const std::filesystem::path& path);
};

/// Writes bands.csv, paradox.csv and notes.txt under outdir; returns the paths written.
std::vector<std::filesystem::path> write_report(const BandPlan& plan,
                                                std::span<const ParadoxReport> paradox,
                                                const std::filesystem::path& outdir);

/// Writes `contents` to `path` in binary mode, throwing ReportIoError on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace paperhorn
