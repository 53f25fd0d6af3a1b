#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "rhlab/errors.hpp"
#include "rhlab/model_catalog.hpp"
#include "rhlab/radius_solver.hpp"

using namespace rhlab;

namespace {
const double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

TEST_CASE("solve examples") {
  CHECK(std::abs(solve(RootProblem::standard(RadiusEquation::Thm11_CP2, 1)).r - kPi / 6) < 1e-12);
  CHECK(std::abs(solve(RootProblem::standard(RadiusEquation::Thm11_CH2, -1)).r -
                 std::log(2 + kSqrt3) / 4) < 1e-12);
  CHECK(std::abs(solve(RootProblem::standard(RadiusEquation::Thm12_CP2, 4)).r - kPi / 12) < 1e-12);
}

TEST_CASE("residual examples") {
  CHECK(std::abs(residual(RootProblem::standard(RadiusEquation::Thm11_CP2, 1), kPi / 6)) < 1e-14);
  CHECK(std::abs(residual(RootProblem::standard(RadiusEquation::Thm11_CH2, -1),
                          std::log(2 + kSqrt3) / 4)) < 1e-14);
  const RootProblem p = RootProblem::standard(RadiusEquation::Thm12_CP2, 1);
  CHECK(residual(p, 1e-3) < residual(p, 1e-2));
  CHECK(residual(p, 1e-6) < -1e5);
}

TEST_CASE("analytic slope matches a difference quotient") {
  for (RadiusEquation eq : {RadiusEquation::Thm11_CP2, RadiusEquation::Thm12_CP2,
                            RadiusEquation::Thm11_CH2}) {
    const ScaledDomain d = scaled_domain(eq);
    const double hi = std::isfinite(d.hi) ? d.hi : 3.0;
    const RootProblem p{eq, eq == RadiusEquation::Thm11_CH2 ? -1.0 : 1.0, 0, 0};
    for (int i = 1; i < 20; ++i) {
      const double x = d.lo + (hi - d.lo) * i / 20.0;
      const double h = 1e-6;
      const double fd = (residual(p, x + h) - residual(p, x - h)) / (2 * h);
      CHECK(residual_slope_scaled(eq, x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("exactly one sign change per equation") {
  for (RadiusEquation eq : {RadiusEquation::Thm11_CP2, RadiusEquation::Thm12_CP2,
                            RadiusEquation::Thm11_CH2}) {
    const double c = eq == RadiusEquation::Thm11_CH2 ? -1.0 : 1.0;
    const RootProblem p = RootProblem::standard(eq, c);
    CHECK(count_sign_changes(p, 5000) == 1);
    CHECK(solve(p).sign_changes == 1);
  }
}

TEST_CASE("scaling law") {
  for (RadiusEquation eq : {RadiusEquation::Thm11_CP2, RadiusEquation::Thm12_CP2,
                            RadiusEquation::Thm11_CH2}) {
    const double sign = eq == RadiusEquation::Thm11_CH2 ? -1.0 : 1.0;
    const double x1 = solve(RootProblem::standard(eq, sign)).r;
    for (double c : {0.25, 1.0, 4.0, 9.0}) {
      const RadiusSolution s = solve(RootProblem::standard(eq, sign * c));
      CHECK(std::abs(s.r * std::sqrt(c) - x1) < 1e-12);
      CHECK(std::abs(s.r - closed_form_radius(eq, sign * c)) < 1e-12);
    }
  }
}

TEST_CASE("solved radius feeds back into the catalog") {
  const double r1 = solve(RootProblem::standard(RadiusEquation::Thm11_CP2, 2)).r;
  CHECK(std::abs(verify_equality_direction({Family::CP2_A1_sphere, r1, 0, 2}).condition_residual) < 1e-10);
  const double r2 = solve(RootProblem::standard(RadiusEquation::Thm12_CP2, 2)).r;
  CHECK(std::abs(verify_equality_direction({Family::CP2_B_tube, r2, 0, 2}).condition_residual) < 1e-10);
  const double r3 = solve(RootProblem::standard(RadiusEquation::Thm11_CH2, -2)).r;
  CHECK(std::abs(verify_equality_direction({Family::CH2_B_tube, r3, 0, -2}).condition_residual) < 1e-10);
}

TEST_CASE("bad problems are rejected") {
  CHECK_THROWS_AS(RootProblem::standard(RadiusEquation::Thm11_CP2, -1), DomainError);
  CHECK_THROWS_AS(RootProblem::standard(RadiusEquation::Thm11_CH2, 1), DomainError);
  RootProblem p = RootProblem::standard(RadiusEquation::Thm12_CP2, 1);
  p.hi = 1.0;
  CHECK_THROWS_AS(solve(p), DomainError);
  RootProblem q = RootProblem::standard(RadiusEquation::Thm11_CP2, 1);
  q.lo = 0.7;
  CHECK_THROWS_AS(solve(q), BracketingError);
  CHECK(parse_equation("Thm12_CP2") == RadiusEquation::Thm12_CP2);
  CHECK_FALSE(parse_equation("thm12").has_value());
}

TEST_CASE("generic bracketed root") {
  const ScalarRoot r = find_bracketed_root([](double x) { return x * x - 2; },
                                           [](double x) { return 2 * x; }, 0, 2, {});
  CHECK(std::abs(r.x - std::sqrt(2.0)) < 1e-15);
  CHECK(r.bisection_steps > 0);
  CHECK_THROWS_AS(find_bracketed_root([](double x) { return x * x + 1; },
                                      [](double x) { return 2 * x; }, 0, 2, {}),
                  BracketingError);
}
