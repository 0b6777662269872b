#pragma once

#include <stdexcept>

#include "paperhorn/curve.hpp"

namespace paperhorn {

/// The cone swept by the tangent segment from (a, f(a)) down to the x-axis.
struct ConeSpec {
  double a = 0.0;            // tangent abscissa
  double base_radius = 0.0;  // f(a)
  double apex_x = 0.0;       // where the tangent line meets the axis
  double slant = 0.0;        // apex to base circle, also the unrolled sector radius
  double sector_angle_deg = 0.0;
  int index = 0;  // 1-based stacking order
};

class ZeroSlope : public std::domain_error {
 public:
  explicit ZeroSlope(double a);
};

/// Root of the tangent line y - f(a) = df(a) (x - a).
double tangent_x_intercept(const Curve& curve, double a);

/// Builds the tangent cone at a. The sector angle follows from matching the
/// sector arc to the base circumference: angle / 360 = base_radius / slant.
ConeSpec cone_at(const Curve& curve, double a, int index);

}  // namespace paperhorn
