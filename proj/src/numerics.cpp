#include "paperhorn/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace paperhorn {

MaxDepthExceeded::MaxDepthExceeded(double lo, double hi)
    : NumericsError(fmt::format("MaxDepthExceeded: quadrature tolerance not met on [{:.9g}, {:.9g}]",
                                lo, hi)) {}

NonFiniteIntegrand::NonFiniteIntegrand(double x)
    : NumericsError(fmt::format("NonFiniteIntegrand: integrand not finite at x = {:.9g}", x)), x_(x) {}

BracketNotFound::BracketNotFound(double target, double limit)
    : NumericsError(fmt::format("BracketNotFound: target {:.9g} not reached before x = {:.9g}",
                                target, limit)) {}

MaxIterExceeded::MaxIterExceeded(double target)
    : NumericsError(fmt::format("MaxIterExceeded: no root found for target {:.9g}", target)) {}

namespace {

// Panels are never accepted above this depth, so a single lucky Simpson
// estimate over a wide interval cannot end the recursion.
constexpr int kMinDepth = 4;

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const RealFunction& g, const QuadratureSettings& s) : g_(g), s_(s) {}

  double eval(double x) const {
    double y = g_(x);
    if (!std::isfinite(y)) throw NonFiniteIntegrand(x);
    return y;
  }

  double run(double lo, double hi) {
    double flo = eval(lo);
    double fhi = eval(hi);
    double mid = 0.5 * (lo + hi);
    double fmid = eval(mid);
    double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);

    // Budget from a coarse estimate of |I|; a 9-point composite rule is
    // enough to set the scale of rel_tol.
    double coarse = 0.0;
    constexpr int kPanels = 8;
    double h = (hi - lo) / kPanels;
    for (int i = 0; i < kPanels; ++i) {
      double a = lo + h * i;
      double b = (i + 1 == kPanels) ? hi : a + h;
      coarse += h / 6.0 * (eval(a) + 4.0 * eval(0.5 * (a + b)) + eval(b));
    }
    tol_density_ = std::max(s_.abs_tol, s_.rel_tol * std::abs(coarse)) / (hi - lo);

    return refine(lo, hi, flo, fmid, fhi, whole, 0);
  }

 private:
  double refine(double lo, double hi, double flo, double fmid, double fhi, double whole,
                int depth) {
    double mid = 0.5 * (lo + hi);
    double lmid = 0.5 * (lo + mid);
    double rmid = 0.5 * (mid + hi);
    double flmid = eval(lmid);
    double frmid = eval(rmid);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
    double diff = left + right - whole;
    double tol = tol_density_ * (hi - lo);

    if (depth >= kMinDepth && std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    if (depth + 1 >= s_.max_depth || !(lo < lmid && rmid < hi)) throw MaxDepthExceeded(lo, hi);

    return refine(lo, mid, flo, flmid, fmid, left, depth + 1) +
           refine(mid, hi, fmid, frmid, fhi, right, depth + 1);
  }

  const RealFunction& g_;
  const QuadratureSettings& s_;
  double tol_density_ = 0.0;
};

void check(const QuadratureSettings& s) {
  if (!(s.abs_tol > 0.0) || !(s.rel_tol > 0.0) || s.max_depth < 1)
    throw std::invalid_argument("QuadratureSettings: tolerances must be positive, max_depth >= 1");
}

void check(const RootSettings& s) {
  if (!(s.x_tol > 0.0) || !(s.f_tol > 0.0) || s.max_iter < 1)
    throw std::invalid_argument("RootSettings: tolerances must be positive, max_iter >= 1");
}

}  // namespace

double integrate(const RealFunction& g, double lo, double hi, const QuadratureSettings& settings) {
  check(settings);
  if (!(lo <= hi)) throw std::invalid_argument("integrate: requires lo <= hi");
  if (lo == hi) return 0.0;
  return AdaptiveSimpson(g, settings).run(lo, hi);
}

double arc_length(const Curve& curve, double x0, double x1, const QuadratureSettings& settings) {
  if (!(curve.domain_start <= x0 && x0 <= x1))
    throw std::invalid_argument(
        fmt::format("arc_length: need {:.9g} <= x0 <= x1, got [{:.9g}, {:.9g}]",
                    curve.domain_start, x0, x1));
  if (!curve.unbounded() && !(x1 < curve.domain_end))
    throw std::invalid_argument(fmt::format("arc_length: x1 = {:.9g} outside curve domain", x1));
  const auto& df = curve.df;
  return integrate(
      [&df](double x) {
        double s = df(x);
        return std::sqrt(1.0 + s * s);
      },
      x0, x1, settings);
}

double solve_increasing(const RealFunction& h, double target, double bracket_lo,
                        const RootSettings& settings, double upper_limit) {
  check(settings);
  if (std::isnan(upper_limit)) upper_limit = bracket_lo + kDomainHorizon;

  double lo = bracket_lo;
  double hlo = h(lo);
  if (std::abs(hlo - target) <= settings.f_tol) return lo;
  if (hlo > target)
    throw std::invalid_argument(
        fmt::format("solve_increasing: h(bracket_lo) = {:.9g} already exceeds target {:.9g}", hlo,
                    target));

  // Grow the bracket. lo trails hi so the final bracket is one step wide.
  double step = 0.125;
  double hi = lo;
  double hhi = hlo;
  for (;;) {
    hi = std::min(lo + step, upper_limit);
    hhi = h(hi);
    if (hhi >= target) break;
    if (hi >= upper_limit) throw BracketNotFound(target, upper_limit);
    lo = hi;
    hlo = hhi;
    step *= 2.0;
  }
  if (std::abs(hhi - target) <= settings.f_tol) return hi;

  auto update = [&](double x) -> bool {
    double hx = h(x);
    if (std::abs(hx - target) <= settings.f_tol) return true;
    if (hx < target) {
      lo = x;
      hlo = hx;
    } else {
      hi = x;
      hhi = hx;
    }
    return false;
  };

  for (int iter = 0; iter < settings.max_iter; ++iter) {
    if (hi - lo <= settings.x_tol)
      return (target - hlo <= hhi - target) ? lo : hi;

    double secant = lo + (target - hlo) * (hi - lo) / (hhi - hlo);
    if (secant > lo && secant < hi && update(secant)) return secant;

    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return (target - hlo <= hhi - target) ? lo : hi;
    if (update(mid)) return mid;
  }
  throw MaxIterExceeded(target);
}

}  // namespace paperhorn
