#pragma once

#include <functional>
#include <optional>
#include <string_view>

namespace rhlab {

/// Transcendental radius equations, in the scaled variable x = sqrt|c| r:
///   Thm11_CP2:  3 cot 2x = cot x,                 0 < x < pi/2
///   Thm12_CP2:  2 tan 2x = 3 tan x + cot x,       0 < x < pi/4
///   Thm11_CH2:  6 tanh 2x = tanh x + coth x,      x > 0
enum class RadiusEquation { Thm11_CP2, Thm12_CP2, Thm11_CH2 };

std::string_view equation_name(RadiusEquation equation);
std::optional<RadiusEquation> parse_equation(std::string_view name);

/// Closed-form root r for the given c.
double closed_form_radius(RadiusEquation equation, double c);

struct RootProblem {
  RadiusEquation equation = RadiusEquation::Thm11_CP2;
  double c = 1.0;
  double lo = 0.0;  // bracket in the scaled variable x
  double hi = 0.0;

  /// Default bracket: just inside the domain with a 1e-8 pole standoff,
  /// and x = 5 as the upper end for Thm11_CH2.
  static RootProblem standard(RadiusEquation equation, double c);
};

/// Open domain of the scaled variable x.
struct ScaledDomain {
  double lo;
  double hi;
};
ScaledDomain scaled_domain(RadiusEquation equation);

/// Left side minus right side at x = sqrt|c| r.
double residual(const RootProblem& problem, double r);

/// d(residual)/dx at the scaled point x.
double residual_slope_scaled(RadiusEquation equation, double x);

struct ScalarRootOptions {
  double bisection_tol = 1e-6;
  double newton_tol = 1e-13;
  int max_iterations = 200;
};

struct ScalarRoot {
  double x = 0.0;
  double value = 0.0;
  int bisection_steps = 0;
  int newton_steps = 0;
};

/// Bisection down to `bisection_tol`, then safeguarded Newton polish.
/// Throws BracketingError when f(lo) and f(hi) do not differ in sign.
ScalarRoot find_bracketed_root(const std::function<double(double)>& f,
                               const std::function<double(double)>& df,
                               double lo, double hi,
                               const ScalarRootOptions& options = {});

/// Number of sign changes of the residual on `samples` uniformly spaced
/// interior points of the problem's bracket.
int count_sign_changes(const RootProblem& problem, int samples = 1000);

struct RadiusSolution {
  double r = 0.0;
  double x = 0.0;
  double residual = 0.0;
  int sign_changes = 0;
};

RadiusSolution solve(const RootProblem& problem, double tol = 1e-12);

}  // namespace rhlab
