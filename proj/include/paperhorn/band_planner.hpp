#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "paperhorn/cone_geometry.hpp"
#include "paperhorn/curve.hpp"
#include "paperhorn/numerics.hpp"

namespace paperhorn {

struct PlanSettings {
  QuadratureSettings quadrature;
  RootSettings root;
};

/// Tangent points spaced a fixed arc length apart along the curve, starting
/// at start_x, and the cone stack they produce.
struct BandPlan {
  std::string curve_name;
  double start_x = 0.0;
  double band_spacing = 0.0;
  int count = 0;
  std::vector<double> tangent_points;
  std::vector<ConeSpec> cones;
};

/// A solve failure, tagged with the 0-based band index it happened at.
class PlanError : public std::runtime_error {
 public:
  PlanError(int band_index, const std::string& what);
  int band_index() const { return band_index_; }

 private:
  int band_index_;
};

/// Point i (i >= 1) solves arc_length(start_x, a) = i * band_spacing,
/// bracketed from point i-1. Point 0 is start_x itself.
BandPlan plan_bands(const Curve& curve, double start_x, double band_spacing, int count,
                    const PlanSettings& settings = {});

}  // namespace paperhorn
