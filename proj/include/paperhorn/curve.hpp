#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>

namespace paperhorn {

/// Width of the sampled window used in place of an unbounded domain end.
inline constexpr double kDomainHorizon = 100.0;

using RealFunction = std::function<double(double)>;

/// A generating curve y = f(x) on [domain_start, domain_end), together with
/// its analytic derivative. Revolving it about the x-axis gives the surface.
struct Curve {
  RealFunction f;
  RealFunction df;
  double domain_start = 0.0;
  double domain_end = std::numeric_limits<double>::infinity();
  std::string name;

  bool unbounded() const { return domain_end == std::numeric_limits<double>::infinity(); }

  /// Right end of the region that sampling and bracketing may touch.
  double effective_end() const;
};

/// y = 1/x for x >= 1/2.
Curve builtin_reciprocal();

bool is_builtin_reciprocal(const Curve& curve);

enum class Violation { Positivity, Monotonicity, Concavity };

const char* to_string(Violation v);

struct ValidationResult {
  std::optional<Violation> violation;
  double x = 0.0;  // first offending sample, meaningful only on failure

  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
  std::string message() const;
};

/// Checks f > 0, df < 0 and df non-decreasing at `samples` evenly spaced
/// points of [domain_start, effective_end()). Requires samples >= 2.
ValidationResult validate(const Curve& curve, int samples);

/// Same checks over `samples` evenly spaced points of the closed range [lo, hi].
ValidationResult validate_range(const Curve& curve, double lo, double hi, int samples);

/// Same checks at caller-chosen abscissae, which must be ascending.
ValidationResult validate_at(const Curve& curve, std::span<const double> xs);

}  // namespace paperhorn
