#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "paperhorn/curve.hpp"

namespace paperhorn {

struct QuadratureSettings {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;
};

struct RootSettings {
  double x_tol = 1e-12;
  double f_tol = 1e-10;
  int max_iter = 200;
};

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MaxDepthExceeded : public NumericsError {
 public:
  MaxDepthExceeded(double lo, double hi);
};

class NonFiniteIntegrand : public NumericsError {
 public:
  explicit NonFiniteIntegrand(double x);
  double x() const { return x_; }

 private:
  double x_;
};

class BracketNotFound : public NumericsError {
 public:
  BracketNotFound(double target, double limit);
};

class MaxIterExceeded : public NumericsError {
 public:
  explicit MaxIterExceeded(double target);
};

/// Adaptive Simpson quadrature of g over [lo, hi]. The global tolerance
/// max(abs_tol, rel_tol * |I|) is shared among panels in proportion to width,
/// and each accepted panel carries the Richardson correction.
double integrate(const RealFunction& g, double lo, double hi,
                 const QuadratureSettings& settings = {});

/// Length of the curve between x0 and x1, i.e. the integral of sqrt(1 + df^2).
double arc_length(const Curve& curve, double x0, double x1,
                  const QuadratureSettings& settings = {});

/// Finds x >= bracket_lo with h(x) = target for a strictly increasing h.
///
/// The upper bracket is grown by doubling a step from bracket_lo, never
/// passing upper_limit; the bracket is then shrunk by a secant step followed
/// by a bisection step on every iteration. Stops once |h(x) - target| <= f_tol
/// or the bracket is narrower than x_tol.
double solve_increasing(const RealFunction& h, double target, double bracket_lo,
                        const RootSettings& settings = {},
                        double upper_limit = std::numeric_limits<double>::quiet_NaN());

}  // namespace paperhorn
