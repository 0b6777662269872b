#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "paperhorn/band_planner.hpp"

using namespace paperhorn;

namespace {

Curve linear_curve() {
  return {[](double x) { return 2.0 - x; }, [](double) { return -1.0; }, 0.0, 1.0, "2-x"};
}

}  // namespace

TEST_CASE("default reciprocal plan") {
  BandPlan plan = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  REQUIRE(plan.tangent_points.size() == 18);
  REQUIRE(plan.cones.size() == 18);
  CHECK(plan.count == 18);
  CHECK(plan.curve_name == "reciprocal");
  CHECK(plan.tangent_points[0] == 0.5);
  for (std::size_t i = 1; i < 18; ++i) {
    CHECK(plan.tangent_points[i] > plan.tangent_points[i - 1]);
    CHECK(plan.tangent_points[i] ==
          doctest::Approx(oracle::kReciprocalTangentPoints9[i - 1]).epsilon(2e-9));
    CHECK(plan.cones[i].sector_angle_deg < plan.cones[i - 1].sector_angle_deg);
  }
  for (std::size_t i = 0; i < 18; ++i) {
    CHECK(plan.cones[i].index == static_cast<int>(i) + 1);
    CHECK(plan.cones[i].a == plan.tangent_points[i]);
  }
}

TEST_CASE("plan points re-verified by the fixed-grid oracle") {
  BandPlan plan = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  for (std::size_t i = 1; i < plan.tangent_points.size(); ++i) {
    double length = oracle::reciprocal_arc_length(0.5, plan.tangent_points[i]);
    CHECK(std::abs(length - 0.25 * static_cast<double>(i)) <= 1e-8);
  }
}

TEST_CASE("single band needs no solve") {
  BandPlan plan = plan_bands(builtin_reciprocal(), 0.75, 0.25, 1);
  REQUIRE(plan.tangent_points.size() == 1);
  CHECK(plan.tangent_points[0] == 0.75);
  CHECK(plan.cones.size() == 1);
  CHECK(plan.cones[0].index == 1);
}

TEST_CASE("straight line spacing") {
  BandPlan plan = plan_bands(linear_curve(), 0.0, std::sqrt(2.0) / 2.0, 2);
  REQUIRE(plan.tangent_points.size() == 2);
  CHECK(plan.tangent_points[0] == 0.0);
  CHECK(std::abs(plan.tangent_points[1] - 0.5) <= 1e-10);
}

TEST_CASE("halving the spacing nests the plan") {
  Curve r = builtin_reciprocal();
  BandPlan coarse = plan_bands(r, 0.5, 0.25, 18);
  BandPlan fine = plan_bands(r, 0.5, 0.125, 35);
  for (std::size_t i = 0; i < coarse.tangent_points.size(); ++i)
    CHECK(std::abs(fine.tangent_points[2 * i] - coarse.tangent_points[i]) <= 1e-8);
}

TEST_CASE("plans are bit-identical across runs") {
  BandPlan a = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  BandPlan b = plan_bands(builtin_reciprocal(), 0.5, 0.25, 18);
  CHECK(a.tangent_points == b.tangent_points);
}

TEST_CASE("plan_bands errors") {
  Curve r = builtin_reciprocal();
  CHECK_THROWS_AS(plan_bands(r, 0.5, 0.25, 0), std::invalid_argument);
  CHECK_THROWS_AS(plan_bands(r, 0.5, 0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(plan_bands(r, 0.25, 0.25, 3), std::invalid_argument);
  // The line on [0, 1) is only sqrt(2) long: the third point cannot exist.
  try {
    plan_bands(linear_curve(), 0.0, 0.6, 4);
    FAIL("expected PlanError");
  } catch (const PlanError& e) {
    CHECK(e.band_index() == 3);
    CHECK(std::string(e.what()).find("BracketNotFound") != std::string::npos);
  }
}
