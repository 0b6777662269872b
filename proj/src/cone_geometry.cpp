#include "paperhorn/cone_geometry.hpp"

#include <cmath>

#include <fmt/format.h>

namespace paperhorn {

ZeroSlope::ZeroSlope(double a)
    : std::domain_error(fmt::format("ZeroSlope: df({:.9g}) is not negative", a)) {}

double tangent_x_intercept(const Curve& curve, double a) {
  double slope = curve.df(a);
  if (!(slope < 0.0)) throw ZeroSlope(a);
  return a - curve.f(a) / slope;
}

ConeSpec cone_at(const Curve& curve, double a, int index) {
  ConeSpec cone;
  cone.a = a;
  cone.index = index;
  cone.base_radius = curve.f(a);
  cone.apex_x = tangent_x_intercept(curve, a);
  cone.slant = std::hypot(cone.apex_x - a, cone.base_radius);
  cone.sector_angle_deg = 360.0 * cone.base_radius / cone.slant;
  return cone;
}

}  // namespace paperhorn
