// rhlab: batch verifier for the Ricci bound, the model catalogue, the radius
// equations, the 2-Hopf system and the elimination.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
// Data goes to stdout; diagnostics go to stderr.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rhlab/acceptance.hpp"
#include "rhlab/case_a1.hpp"
#include "rhlab/errors.hpp"
#include "rhlab/geom_core.hpp"
#include "rhlab/model_catalog.hpp"
#include "rhlab/radius_solver.hpp"
#include "rhlab/report_io.hpp"
#include "rhlab/ricci_bound.hpp"
#include "rhlab/twohopf_ode.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rhlab;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double tolerance() {
  const char* env = std::getenv("LAB_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string("LAB_TOL must be a positive number, got '") +
                     env + "'");
  }
  return v;
}

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string family_list() {
  std::string out;
  for (Family f : all_families()) {
    if (!out.empty()) out += ", ";
    out += family_name(f);
  }
  return out;
}

Family family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'; known: " + family_list());
  return *f;
}

// models ----------------------------------------------------------------

struct ModelsArgs {
  std::string action;
  std::string family;
  double param = 0.0;
  double param2 = 0.0;
  double c = 1.0;
};

int run_models(const ModelsArgs& a) {
  if (a.action == "list") {
    for (Family f : all_families()) std::cout << family_name(f) << '\n';
    return kOk;
  }
  if (a.action != "show") throw UsageError("models takes 'list' or 'show <family>'");
  if (a.family.empty()) throw UsageError("models show needs a family; known: " + family_list());

  const ModelPoint point{family_or_throw(a.family), a.param, a.param2, a.c};
  const PrincipalSpectrum spec = spectrum(point);
  const ShapeState state = shape_state(point);
  ordered_json j = ordered_json::parse(to_json(spec));
  j["shape"] = matrix_json(state.a());

  int code = kOk;
  if (is_hopf_family(point.family)) {
    const HopfTriple h = hopf_curvatures(point);
    const double res = hopf_relation_residual(h.delta, h.lambda1, h.lambda2, point.c);
    j["hopf_residual"] = number(res);
    if (!(std::abs(res) <= tolerance())) code = kVerificationFailed;
  } else {
    j["hopf_residual"] = nullptr;
  }
  std::cout << j.dump(2) << '\n';
  return code;
}

// check-bound -------------------------------------------------------------

struct BoundArgs {
  std::string family;
  double param = 0.0;
  double param2 = 0.0;
  std::vector<double> matrix;
  double c = 1.0;
  std::string direction = "xi";
};

int run_check_bound(const BoundArgs& a) {
  const auto dir = parse_direction(a.direction);
  if (!dir) throw UsageError("direction must be xi, e2 or e3");
  if (a.family.empty() == a.matrix.empty()) {
    throw UsageError("give exactly one of --family or --matrix");
  }
  const double tol = tolerance();
  std::optional<ShapeState> state;
  if (!a.family.empty()) {
    state = shape_state({family_or_throw(a.family), a.param, a.param2, a.c});
  } else {
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = a.matrix[3 * i + j];
    state = ShapeState(AdaptedFrame::standard(2), m);
  }
  const BoundReport r =
      ricci_upper_bound(*state, SpaceFormParams(2, a.c), direction_vector(*dir), tol);
  std::cout << to_json(r) << '\n';
  return r.gap >= -tol ? kOk : kVerificationFailed;
}

// solve-radius ------------------------------------------------------------

int run_solve_radius(const std::string& equation, double c) {
  const auto eq = parse_equation(equation);
  if (!eq) throw UsageError("equation must be Thm11_CP2, Thm12_CP2 or Thm11_CH2");
  const RootProblem problem = RootProblem::standard(*eq, c);
  const RadiusSolution sol = solve(problem);
  std::cout << to_json(sol, problem) << '\n';
  return std::abs(sol.residual) <= tolerance() ? kOk : kVerificationFailed;
}

// integrate ---------------------------------------------------------------

struct IntegrateArgs {
  double alpha = 0.0;
  double beta0 = 0.0;
  double gamma0 = 0.0;
  double c = 1.0;
  std::vector<double> span{0.0, 1.0};
  double step = 1e-3;
  std::string format = "json";
};

int run_integrate(const IntegrateArgs& a) {
  if (a.beta0 == 0.0) throw UsageError("beta must be nonzero");
  if (a.span.size() != 2 || !(a.span[1] > a.span[0])) {
    throw UsageError("--span needs two values s0 < s1");
  }
  const double tol = tolerance();
  const TwoHopfSystem sys(a.c);
  const TwoHopfState initial =
      TwoHopfState::constant_alpha(a.alpha, a.beta0, a.gamma0, a.span[0]);
  const Trajectory traj = sys.integrate(initial, a.span[0], a.span[1], a.step);

  double drift = 0.0;
  for (const auto& s : traj.samples) {
    drift = std::max({drift, std::abs(s.state.beta - initial.beta),
                      std::abs(s.state.gamma - initial.gamma)});
  }
  const bool constant = drift <= tol;

  // Closed-form check on the tan-profile branch: beta = k tan(k s + d).
  std::optional<double> closed_form_error;
  if (a.c > 0.0 && sys.branch(initial, tol) == StationaryBranch::tan_profile &&
      std::abs(a.alpha + 7.0 * std::sqrt(a.c / 8.0)) <= tol &&
      std::abs(a.gamma0 - std::sqrt(a.c / 8.0)) <= tol) {
    const double k = std::sqrt(27.0 * a.c / 8.0);
    const double d = std::atan(a.beta0 / k) - k * a.span[0];
    double worst = 0.0;
    for (const auto& s : traj.samples) {
      worst = std::max(worst, std::abs(s.state.beta - k * std::tan(k * s.state.s + d)));
    }
    closed_form_error = worst;
  }

  const ResidualSummary& rs = traj.residual_summary;
  if (a.format == "csv") {
    std::cout << trajectory_csv(traj);
    std::cerr << "stop=" << stop_reason_name(traj.stop)
              << " constant=" << (constant ? "true" : "false")
              << " max_cd2=" << format15(rs.max_cd2)
              << " max_cd6=" << format15(rs.max_cd6)
              << " max_ga1=" << format15(rs.max_ga1);
    if (closed_form_error) std::cerr << " closed_form_max_error=" << format15(*closed_form_error);
    std::cerr << '\n';
  } else {
    ordered_json j = ordered_json::parse(to_json(traj));
    j["constant"] = constant;
    j["max_drift"] = number(drift);
    j["branch"] = branch_name(sys.branch(initial, tol));
    j["closed_form_max_error"] =
        closed_form_error ? number(*closed_form_error) : ordered_json(nullptr);
    std::cout << j.dump(2) << '\n';
  }
  const bool ok = traj.stop == StopReason::completed &&
                  rs.max_cd2 <= tol && rs.max_cd6 <= tol;
  return ok ? kOk : kVerificationFailed;
}

// eliminate ---------------------------------------------------------------

struct EliminateArgs {
  std::string report_path;
  bool show_f = false;
  bool show_g = false;
};

int run_eliminate(const EliminateArgs& a) {
  const RationalPoly f = printed_f();
  if (a.show_f || a.show_g) {
    if (a.show_f) std::cout << f.to_string() << '\n';
    if (a.show_g) std::cout << derive_g_and_p(f).g.to_string() << '\n';
    return kOk;
  }
  const EliminationReport report = verify_factorization();
  const DerivedPolys derived = derive_g_and_p(f);
  const std::string text = to_json(report, &derived);
  if (a.report_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(a.report_path);
    if (!out) throw UsageError("cannot write " + a.report_path);
    out << text << '\n';
  }
  const bool ok = report.f_divides && report.reconstructs && !derived.p.is_zero();
  return ok ? kOk : kVerificationFailed;
}

// verify-all --------------------------------------------------------------

int run_verify_all() {
  int failed = 0;
  for (const auto& r : run_acceptance_suite()) {
    std::cout << format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (kCriterionCount - failed) << '/' << kCriterionCount
            << " criteria passed\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ricci bound and real hypersurface verifier"};
  app.require_subcommand(1);

  ModelsArgs models;
  auto* models_cmd = app.add_subcommand("models", "list families or show one");
  models_cmd->add_option("action", models.action, "list | show")->required();
  models_cmd->add_option("family", models.family, "family identifier");
  models_cmd->add_option("--param", models.param, "r, beta, u or s");
  models_cmd->add_option("--param2", models.param2, "d for the tan profile");
  models_cmd->add_option("--c", models.c, "holomorphic curvature");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("check-bound", "evaluate the Ricci bound");
  bound_cmd->add_option("--family", bound.family);
  bound_cmd->add_option("--param", bound.param);
  bound_cmd->add_option("--param2", bound.param2);
  bound_cmd->add_option("--matrix", bound.matrix, "9 reals, row major")->expected(9);
  bound_cmd->add_option("--c", bound.c)->required();
  bound_cmd->add_option("--direction", bound.direction, "xi | e2 | e3");

  std::string equation;
  double radius_c = 1.0;
  auto* radius_cmd = app.add_subcommand("solve-radius", "solve a radius equation");
  radius_cmd->add_option("--equation", equation)->required();
  radius_cmd->add_option("--c", radius_c)->required();

  IntegrateArgs integ;
  auto* integ_cmd = app.add_subcommand("integrate", "integrate the 2-Hopf system");
  integ_cmd->add_option("--alpha", integ.alpha)->required();
  integ_cmd->add_option("--beta0", integ.beta0)->required();
  integ_cmd->add_option("--gamma0", integ.gamma0)->required();
  integ_cmd->add_option("--c", integ.c)->required();
  integ_cmd->add_option("--span", integ.span, "s0 s1")->expected(2);
  integ_cmd->add_option("--step", integ.step);
  integ_cmd->add_option("--format", integ.format)
      ->check(CLI::IsMember({"json", "csv"}));

  EliminateArgs elim;
  auto* elim_cmd = app.add_subcommand("eliminate", "run the resultant elimination");
  elim_cmd->add_option("--report", elim.report_path, "write the JSON report here");
  elim_cmd->add_flag("--show-f", elim.show_f);
  elim_cmd->add_flag("--show-g", elim.show_g);

  auto* all_cmd = app.add_subcommand("verify-all", "run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*models_cmd) return run_models(models);
    if (*bound_cmd) return run_check_bound(bound);
    if (*radius_cmd) return run_solve_radius(equation, radius_c);
    if (*integ_cmd) return run_integrate(integ);
    if (*elim_cmd) return run_eliminate(elim);
    if (*all_cmd) return run_verify_all();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const SingularityError& e) {
    std::cerr << "singular: " << e.what() << '\n';
    return kUsage;
  } catch (const BracketingError& e) {
    std::cerr << "bracketing: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}
