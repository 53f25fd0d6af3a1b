#include "rhlab/radius_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rhlab/errors.hpp"

namespace rhlab {
namespace {

constexpr double kPoleStandoff = 1e-8;
constexpr double kCh2UpperBracket = 5.0;

double scale_of(double c) {
  if (c == 0.0 || !std::isfinite(c)) {
    throw DomainError("c must be finite and nonzero");
  }
  return std::sqrt(std::abs(c));
}

void require_sign(RadiusEquation equation, double c) {
  const bool projective = equation != RadiusEquation::Thm11_CH2;
  if (projective && c < 0.0) {
    throw DomainError(std::string(equation_name(equation)) + " needs c > 0");
  }
  if (!projective && c > 0.0) {
    throw DomainError(std::string(equation_name(equation)) + " needs c < 0");
  }
}

double scaled_residual(RadiusEquation equation, double x) {
  const ScaledDomain dom = scaled_domain(equation);
  if (!(x > dom.lo && x < dom.hi)) {
    throw DomainError("x = " + std::to_string(x) + " outside the domain of " +
                      std::string(equation_name(equation)));
  }
  switch (equation) {
    case RadiusEquation::Thm11_CP2:
      return 3.0 / std::tan(2.0 * x) - 1.0 / std::tan(x);
    case RadiusEquation::Thm12_CP2:
      return 2.0 * std::tan(2.0 * x) - 3.0 * std::tan(x) - 1.0 / std::tan(x);
    case RadiusEquation::Thm11_CH2:
      return 6.0 * std::tanh(2.0 * x) - std::tanh(x) - 1.0 / std::tanh(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string_view equation_name(RadiusEquation equation) {
  switch (equation) {
    case RadiusEquation::Thm11_CP2: return "Thm11_CP2";
    case RadiusEquation::Thm12_CP2: return "Thm12_CP2";
    case RadiusEquation::Thm11_CH2: return "Thm11_CH2";
  }
  return "unknown";
}

std::optional<RadiusEquation> parse_equation(std::string_view name) {
  for (auto e : {RadiusEquation::Thm11_CP2, RadiusEquation::Thm12_CP2,
                 RadiusEquation::Thm11_CH2}) {
    if (equation_name(e) == name) return e;
  }
  return std::nullopt;
}

double closed_form_radius(RadiusEquation equation, double c) {
  require_sign(equation, c);
  const double k = scale_of(c);
  switch (equation) {
    case RadiusEquation::Thm11_CP2:
    case RadiusEquation::Thm12_CP2:
      return std::numbers::pi / (6.0 * k);
    case RadiusEquation::Thm11_CH2:
      return std::log(2.0 + std::sqrt(3.0)) / (4.0 * k);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ScaledDomain scaled_domain(RadiusEquation equation) {
  switch (equation) {
    case RadiusEquation::Thm11_CP2:
      return {0.0, std::numbers::pi / 2.0};
    case RadiusEquation::Thm12_CP2:
      return {0.0, std::numbers::pi / 4.0};
    case RadiusEquation::Thm11_CH2:
      return {0.0, std::numeric_limits<double>::infinity()};
  }
  return {0.0, 0.0};
}

RootProblem RootProblem::standard(RadiusEquation equation, double c) {
  require_sign(equation, c);
  scale_of(c);
  const ScaledDomain dom = scaled_domain(equation);
  RootProblem p;
  p.equation = equation;
  p.c = c;
  p.lo = dom.lo + kPoleStandoff;
  p.hi = std::isfinite(dom.hi) ? dom.hi - kPoleStandoff : kCh2UpperBracket;
  return p;
}

double residual(const RootProblem& problem, double r) {
  require_sign(problem.equation, problem.c);
  return scaled_residual(problem.equation, scale_of(problem.c) * r);
}

double residual_slope_scaled(RadiusEquation equation, double x) {
  auto csc2 = [](double t) {
    const double s = std::sin(t);
    return 1.0 / (s * s);
  };
  auto sec2 = [](double t) {
    const double s = std::cos(t);
    return 1.0 / (s * s);
  };
  auto sech2 = [](double t) {
    const double s = std::cosh(t);
    return 1.0 / (s * s);
  };
  auto csch2 = [](double t) {
    const double s = std::sinh(t);
    return 1.0 / (s * s);
  };
  switch (equation) {
    case RadiusEquation::Thm11_CP2:
      return -6.0 * csc2(2.0 * x) + csc2(x);
    case RadiusEquation::Thm12_CP2:
      return 4.0 * sec2(2.0 * x) - 3.0 * sec2(x) + csc2(x);
    case RadiusEquation::Thm11_CH2:
      return 12.0 * sech2(2.0 * x) - sech2(x) + csch2(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ScalarRoot find_bracketed_root(const std::function<double(double)>& f,
                               const std::function<double(double)>& df,
                               double lo, double hi,
                               const ScalarRootOptions& options) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw BracketingError("no sign change on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }

  ScalarRoot out;
  while (hi - lo > options.bisection_tol &&
         out.bisection_steps < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    ++out.bisection_steps;
    if (fmid == 0.0) {
      out.x = mid;
      return out;
    }
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  for (int i = 0; i < options.max_iterations; ++i) {
    const double fx = f(x);
    if (fx == 0.0) break;
    // Keep the bracket current so a wild Newton step can fall back.
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double slope = df(x);
    double next = x - fx / slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);
    }
    ++out.newton_steps;
    const double step = std::abs(next - x);
    x = next;
    if (step <= options.newton_tol * std::max(1.0, std::abs(x))) break;
  }
  out.x = x;
  out.value = f(x);
  return out;
}

int count_sign_changes(const RootProblem& problem, int samples) {
  int changes = 0;
  double previous = 0.0;
  bool have_previous = false;
  for (int i = 0; i < samples; ++i) {
    const double x = problem.lo + (problem.hi - problem.lo) * i / (samples - 1);
    const double v = scaled_residual(problem.equation, x);
    if (v == 0.0) continue;
    if (have_previous && std::signbit(v) != std::signbit(previous)) ++changes;
    previous = v;
    have_previous = true;
  }
  return changes;
}

RadiusSolution solve(const RootProblem& problem, double tol) {
  if (!(tol > 0.0)) {
    throw PreconditionError("tolerance must be positive");
  }
  require_sign(problem.equation, problem.c);
  const ScaledDomain dom = scaled_domain(problem.equation);
  if (!(problem.lo > dom.lo && problem.hi < dom.hi && problem.lo < problem.hi)) {
    throw DomainError("bracket must lie strictly inside the domain of " +
                      std::string(equation_name(problem.equation)) +
                      " (it may not contain a pole)");
  }
  const double k = scale_of(problem.c);
  const RadiusEquation eq = problem.equation;
  ScalarRootOptions options;
  options.newton_tol = std::min(1e-13, tol);
  const ScalarRoot root = find_bracketed_root(
      [eq](double x) { return scaled_residual(eq, x); },
      [eq](double x) { return residual_slope_scaled(eq, x); }, problem.lo,
      problem.hi, options);

  RadiusSolution out;
  out.x = root.x;
  out.r = root.x / k;
  out.residual = root.value;
  out.sign_changes = count_sign_changes(problem);
  return out;
}

}  // namespace rhlab
