#include "rhlab/twohopf_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "rhlab/errors.hpp"

namespace rhlab {

TwoHopfState TwoHopfState::constant_alpha(double alpha, double beta,
                                          double gamma, double s) {
  return TwoHopfState{alpha, beta, gamma, (alpha + gamma) / 3.0, s};
}

ShapeState TwoHopfState::shape() const {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = alpha;
  a(0, 1) = a(1, 0) = beta;
  a(1, 1) = gamma;
  a(2, 2) = mu;
  return ShapeState(AdaptedFrame::standard(2), std::move(a));
}

std::string_view stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::completed: return "completed";
    case StopReason::beta_floor: return "beta_floor";
    case StopReason::overflow: return "overflow";
  }
  return "unknown";
}

std::string_view branch_name(StationaryBranch branch) {
  switch (branch) {
    case StationaryBranch::ruled_minimal: return "ruled_minimal";
    case StationaryBranch::tan_profile: return "tan_profile";
    case StationaryBranch::generic: return "generic";
  }
  return "unknown";
}

TwoHopfSystem::TwoHopfSystem(double c, TwoHopfOptions options)
    : c_(c), options_(options) {
  if (c == 0.0 || !std::isfinite(c)) {
    throw PreconditionError("c must be finite and nonzero");
  }
  if (!(options_.beta_floor > 0.0) || !(options_.overflow_guard > 0.0)) {
    throw PreconditionError("beta_floor and overflow_guard must be positive");
  }
}

StateDerivative TwoHopfSystem::rhs(const TwoHopfState& st) const {
  if (!(std::abs(st.beta) >= options_.beta_floor)) {
    throw SingularityError("beta = " + std::to_string(st.beta) +
                           " is below the floor; the system is singular");
  }
  const double a = st.alpha;
  const double b = st.beta;
  const double g = st.gamma;
  const double m = st.mu;
  return StateDerivative{
      .dalpha = b * (a + g - 3.0 * m),
      .dbeta = b * b + g * g + m * (a - 2.0 * g) + c_,
      .dgamma = (g - m) * (g * g - a * g - c_) / b + b * (2.0 * g + m),
  };
}

double TwoHopfSystem::stationarity_residual(const TwoHopfState& st) const {
  const double g = st.gamma;
  const double m = st.mu;
  return (g - m) * (2.0 * g * g - 3.0 * g * m - c_) +
         st.beta * st.beta * (2.0 * g + m);
}

StationaryBranch TwoHopfSystem::branch(const TwoHopfState& st,
                                       double tol) const {
  if (std::abs(st.gamma) <= tol && std::abs(st.mu) <= tol) {
    return StationaryBranch::ruled_minimal;
  }
  if (std::abs(2.0 * st.gamma + st.mu) <= tol) {
    return StationaryBranch::tan_profile;
  }
  return StationaryBranch::generic;
}

FrameScalars TwoHopfSystem::frame_scalars(const TwoHopfState& st) const {
  const StateDerivative d = rhs(st);
  FrameScalars out;
  out.e3_beta = d.dbeta;
  out.e3_gamma = d.dgamma;
  out.e3_mu = (d.dalpha + d.dgamma) / 3.0;
  // cd8: e3(3 mu - gamma) = beta (chi2 - gamma)
  out.chi2 = st.gamma + (3.0 * out.e3_mu - out.e3_gamma) / st.beta;
  // cd3: e3 beta = -gamma^2 + beta chi1 + 3 mu^2 + 2c
  out.chi1 = (out.e3_beta + st.gamma * st.gamma - 3.0 * st.mu * st.mu -
              2.0 * c_) /
             st.beta;
  return out;
}

CodazziResiduals TwoHopfSystem::codazzi_residuals(const TwoHopfState& st,
                                                  const FrameScalars& fs,
                                                  double e3_chi1) const {
  const double b = st.beta;
  const double g = st.gamma;
  const double m = st.mu;
  CodazziResiduals r;
  r.cd2 = fs.e3_gamma - ((g - m) * fs.chi1 + b * (g + 2.0 * m));
  r.cd6 = b * fs.chi1 + (m - g) * fs.chi2 - (b * b + g * g - 2.0 * g * m - c_);
  r.ga1 = e3_chi1 - 2.0 * m * g - fs.chi1 * fs.chi1 - (g + m) * fs.chi2 -
          4.0 * c_;
  return r;
}

namespace {

// Second-order derivative of samples y at index i on a non-uniform grid s.
double three_point_derivative(const std::vector<double>& s,
                              const std::vector<double>& y, std::size_t i) {
  const std::size_t n = s.size();
  if (n < 2) {
    return std::nan("");
  }
  if (n == 2) {
    return (y[1] - y[0]) / (s[1] - s[0]);
  }
  if (i == 0) {
    const double h1 = s[1] - s[0];
    const double h2 = s[2] - s[1];
    return -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * y[0] +
           (h1 + h2) / (h1 * h2) * y[1] - h1 / (h2 * (h1 + h2)) * y[2];
  }
  if (i == n - 1) {
    const double h1 = s[n - 2] - s[n - 3];
    const double h2 = s[n - 1] - s[n - 2];
    return h2 / (h1 * (h1 + h2)) * y[n - 3] -
           (h1 + h2) / (h1 * h2) * y[n - 2] +
           (2.0 * h2 + h1) / (h2 * (h1 + h2)) * y[n - 1];
  }
  const double h1 = s[i] - s[i - 1];
  const double h2 = s[i + 1] - s[i];
  return -h2 / (h1 * (h1 + h2)) * y[i - 1] + (h2 - h1) / (h1 * h2) * y[i] +
         h1 / (h2 * (h1 + h2)) * y[i + 1];
}

}  // namespace

Trajectory TwoHopfSystem::integrate(const TwoHopfState& initial, double s0,
                                    double s1, double step) const {
  if (!(step > 0.0) || !(s1 > s0)) {
    throw PreconditionError("integrate needs step > 0 and s1 > s0");
  }
  const double constraint = initial.alpha + initial.gamma - 3.0 * initial.mu;
  const double scale =
      1.0 + std::abs(initial.alpha) + std::abs(initial.gamma);
  if (std::abs(constraint) > kDefaultTolerance * scale) {
    throw PreconditionError(
        "only constant-alpha integration is supported: the initial state "
        "must satisfy alpha + gamma = 3 mu");
  }
  if (!(std::abs(initial.beta) >= options_.beta_floor)) {
    throw SingularityError("initial beta is below the floor");
  }

  const double alpha = initial.alpha;
  const double floor = options_.beta_floor;
  const double guard = options_.overflow_guard;

  // (beta, gamma) is the integrated state; alpha is held fixed.
  using Pair = std::array<double, 2>;
  bool singular = false;
  auto field = [&](const Pair& y) -> Pair {
    if (!(std::abs(y[0]) >= floor)) {
      singular = true;
      return {0.0, 0.0};
    }
    const StateDerivative d =
        rhs(TwoHopfState::constant_alpha(alpha, y[0], y[1]));
    return {d.dbeta, d.dgamma};
  };

  Trajectory traj;
  traj.step = step;
  traj.samples.push_back(
      {TwoHopfState::constant_alpha(alpha, initial.beta, initial.gamma, s0),
       0.0, 0.0, {}});

  auto rk4 = [&](const Pair& y, double h) -> Pair {
    const Pair k1 = field(y);
    const Pair k2 = field({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    const Pair k3 = field({y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    const Pair k4 = field({y[0] + h * k3[0], y[1] + h * k3[1]});
    return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
  };
  auto usable = [&](const Pair& from, const Pair& to) {
    return !singular && std::abs(to[0]) >= floor &&
           std::signbit(to[0]) == std::signbit(from[0]) &&
           std::isfinite(to[1]) && std::abs(to[0]) <= guard &&
           std::abs(to[1]) <= guard;
  };

  const auto steps =
      static_cast<long>(std::ceil((s1 - s0) / step - 1e-9));
  Pair y{initial.beta, initial.gamma};
  for (long i = 1; i <= steps; ++i) {
    const double s_prev = traj.samples.back().state.s;
    const double s_next = (i == steps) ? s1 : s0 + static_cast<double>(i) * step;
    const double h = s_next - s_prev;

    const Pair next = rk4(y, h);

    if (singular || !(std::abs(next[0]) >= floor) ||
        std::signbit(next[0]) != std::signbit(y[0])) {
      traj.stop = StopReason::beta_floor;
      break;
    }
    if (!std::isfinite(next[0]) || !std::isfinite(next[1]) ||
        std::abs(next[0]) > guard || std::abs(next[1]) > guard) {
      traj.stop = StopReason::overflow;
      break;
    }
    y = next;
    traj.samples.push_back(
        {TwoHopfState::constant_alpha(alpha, y[0], y[1], s_next), 0.0, 0.0,
         {}});
  }

  // One extra step past each end, when it stays regular, so that every
  // sample gets a centered difference.
  std::vector<double> s_grid;
  std::vector<double> chi1_values;
  std::vector<FrameScalars> scalars;
  s_grid.reserve(traj.samples.size() + 2);
  chi1_values.reserve(traj.samples.size() + 2);
  scalars.reserve(traj.samples.size());

  auto ghost = [&](const TwoHopfState& from, double h) -> std::optional<double> {
    singular = false;
    const Pair start{from.beta, from.gamma};
    const Pair to = rk4(start, h);
    if (!usable(start, to)) return std::nullopt;
    return frame_scalars(TwoHopfState::constant_alpha(alpha, to[0], to[1]))
        .chi1;
  };

  std::size_t offset = 0;
  const TwoHopfState& first = traj.samples.front().state;
  if (const auto before = ghost(first, -step)) {
    s_grid.push_back(first.s - step);
    chi1_values.push_back(*before);
    offset = 1;
  }
  for (auto& sample : traj.samples) {
    const FrameScalars fs = frame_scalars(sample.state);
    sample.chi1 = fs.chi1;
    sample.chi2 = fs.chi2;
    scalars.push_back(fs);
    s_grid.push_back(sample.state.s);
    chi1_values.push_back(fs.chi1);
  }
  const TwoHopfState& last = traj.samples.back().state;
  if (const auto after = ghost(last, step)) {
    s_grid.push_back(last.s + step);
    chi1_values.push_back(*after);
  }

  ResidualSummary& summary = traj.residual_summary;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    auto& sample = traj.samples[i];
    const double e3_chi1 =
        three_point_derivative(s_grid, chi1_values, i + offset);
    sample.residuals = codazzi_residuals(sample.state, scalars[i], e3_chi1);
    summary.max_cd2 = std::max(summary.max_cd2, std::abs(sample.residuals.cd2));
    summary.max_cd6 = std::max(summary.max_cd6, std::abs(sample.residuals.cd6));
    if (std::isfinite(sample.residuals.ga1)) {
      summary.max_ga1 =
          std::max(summary.max_ga1, std::abs(sample.residuals.ga1));
    }
    const TwoHopfState& st = sample.state;
    summary.max_constraint = std::max(
        summary.max_constraint, std::abs(st.alpha + st.gamma - 3.0 * st.mu));
  }
  return traj;
}

}  // namespace rhlab
