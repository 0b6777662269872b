#include "paperhorn/band_planner.hpp"

#include <cmath>

#include <fmt/format.h>

namespace paperhorn {

PlanError::PlanError(int band_index, const std::string& what)
    : std::runtime_error(fmt::format("band {}: {}", band_index, what)), band_index_(band_index) {}

BandPlan plan_bands(const Curve& curve, double start_x, double band_spacing, int count,
                    const PlanSettings& settings) {
  if (count < 1) throw std::invalid_argument("plan_bands: count must be >= 1");
  if (!(band_spacing > 0.0)) throw std::invalid_argument("plan_bands: band_spacing must be > 0");
  if (!(start_x >= curve.domain_start) || (!curve.unbounded() && !(start_x < curve.domain_end)))
    throw std::invalid_argument(
        fmt::format("plan_bands: start_x = {:.9g} outside curve domain", start_x));

  BandPlan plan;
  plan.curve_name = curve.name;
  plan.start_x = start_x;
  plan.band_spacing = band_spacing;
  plan.count = count;
  plan.tangent_points.reserve(static_cast<std::size_t>(count));
  plan.tangent_points.push_back(start_x);

  double limit = curve.unbounded() ? curve.domain_start + kDomainHorizon
                                   : std::nextafter(curve.domain_end, start_x);
  RealFunction length_to = [&](double a) {
    return arc_length(curve, start_x, a, settings.quadrature);
  };

  for (int i = 1; i < count; ++i) {
    double target = i * band_spacing;
    try {
      plan.tangent_points.push_back(
          solve_increasing(length_to, target, plan.tangent_points.back(), settings.root, limit));
    } catch (const NumericsError& e) {
      throw PlanError(i, e.what());
    }
  }

  plan.cones.reserve(plan.tangent_points.size());
  for (std::size_t i = 0; i < plan.tangent_points.size(); ++i)
    plan.cones.push_back(cone_at(curve, plan.tangent_points[i], static_cast<int>(i) + 1));
  return plan;
}

}  // namespace paperhorn
