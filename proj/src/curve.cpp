#include "paperhorn/curve.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace paperhorn {

double Curve::effective_end() const {
  if (unbounded()) return domain_start + kDomainHorizon;
  return domain_end;
}

Curve builtin_reciprocal() {
  return Curve{
      .f = [](double x) { return 1.0 / x; },
      .df = [](double x) { return -1.0 / (x * x); },
      .domain_start = 0.5,
      .domain_end = std::numeric_limits<double>::infinity(),
      .name = "reciprocal",
  };
}

bool is_builtin_reciprocal(const Curve& curve) {
  return curve.name == "reciprocal" && curve.domain_start == 0.5 && curve.unbounded();
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::Positivity: return "PositivityViolation";
    case Violation::Monotonicity: return "MonotonicityViolation";
    case Violation::Concavity: return "ConcavityViolation";
  }
  return "?";
}

std::string ValidationResult::message() const {
  if (ok()) return "ok";
  return fmt::format("{} at x = {:.9g}", to_string(*violation), x);
}

ValidationResult validate_at(const Curve& curve, std::span<const double> xs) {
  double prev_slope = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    double y = curve.f(x);
    if (!(y > 0.0)) return {Violation::Positivity, x};
    double slope = curve.df(x);
    if (!(slope < 0.0)) return {Violation::Monotonicity, x};
    if (slope < prev_slope) return {Violation::Concavity, x};
    prev_slope = slope;
  }
  return {};
}

namespace {

// n points from lo with step (hi - lo) / divisions.
std::vector<double> grid(double lo, double hi, int n, int divisions) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  double step = (hi - lo) / divisions;
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = lo + step * i;
  return xs;
}

}  // namespace

ValidationResult validate(const Curve& curve, int samples) {
  if (samples < 2) throw std::invalid_argument("validate: samples must be >= 2");
  double lo = curve.domain_start;
  double hi = curve.effective_end();
  if (!(lo < hi)) throw std::invalid_argument("validate: empty curve domain");
  // Half-open domain: the right end itself is never sampled.
  auto xs = grid(lo, hi, samples, samples);
  return validate_at(curve, xs);
}

ValidationResult validate_range(const Curve& curve, double lo, double hi, int samples) {
  if (samples < 2) throw std::invalid_argument("validate_range: samples must be >= 2");
  if (!(lo <= hi)) throw std::invalid_argument("validate_range: lo > hi");
  auto xs = grid(lo, hi, samples, samples - 1);
  return validate_at(curve, xs);
}

}  // namespace paperhorn
