#include "rhlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rhlab {
namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

ordered_json bound_json(const BoundReport& r) {
  return ordered_json{
      {"ric", number(r.ric)},       {"bound", number(r.bound)},
      {"gap", number(r.gap)},       {"equality", r.equality},
      {"mu", number(r.mu)},         {"traceB", number(r.trace_b)},
  };
}

ordered_json point_json(const ModelPoint& p) {
  ordered_json j{{"family", family_name(p.family)}, {"c", number(p.c)}};
  switch (p.family) {
    case Family::CH2_A0_horosphere:
      break;
    case Family::RuledMinimal:
      j["beta"] = number(p.param);
      break;
    case Family::LohnherrEquidistant:
      j["u"] = number(p.param);
      break;
    case Family::TanProfile2Hopf:
      j["s"] = number(p.param);
      j["d"] = number(p.param2);
      break;
    default:
      j["r"] = number(p.param);
  }
  return j;
}

}  // namespace

double round15(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::strtod(buf, nullptr);
}

std::string format15(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string to_json(const BoundReport& report, int indent) {
  return bound_json(report).dump(indent);
}

std::string to_json(const PrincipalSpectrum& spectrum, int indent) {
  ordered_json j = point_json(spectrum.point);
  ordered_json curvatures = ordered_json::array();
  for (const auto& pc : spectrum.curvatures) {
    curvatures.push_back({{"name", pc.name},
                          {"value", number(pc.value)},
                          {"multiplicity", pc.multiplicity},
                          {"pairing", pairing_name(pc.pairing)}});
  }
  j["curvatures"] = std::move(curvatures);
  return j.dump(indent);
}

std::string to_json(const FamilyCheck& check, int indent) {
  ordered_json j = point_json(check.point);
  j["residuals"] = {{"xi", number(check.residuals[0])},
                    {"e2", number(check.residuals[1])},
                    {"e3", number(check.residuals[2])}};
  j["condition_residual"] = number(check.condition_residual);
  j["residual_direction"] = direction_name(check.residual_direction);
  j["equality_direction"] =
      check.equality_direction
          ? ordered_json(direction_name(*check.equality_direction))
          : ordered_json(nullptr);
  j["report"] = bound_json(check.report);
  return j.dump(indent);
}

std::string to_json(const RadiusSolution& solution, const RootProblem& problem,
                    int indent) {
  ordered_json j{
      {"equation", equation_name(problem.equation)},
      {"c", number(problem.c)},
      {"r", number(solution.r)},
      {"x", number(solution.x)},
      {"residual", number(solution.residual)},
      {"closed_form", number(closed_form_radius(problem.equation, problem.c))},
      {"sign_changes", solution.sign_changes},
  };
  return j.dump(indent);
}

std::string to_json(const Trajectory& trajectory, int indent) {
  ordered_json samples = ordered_json::array();
  for (const auto& s : trajectory.samples) {
    samples.push_back({
        {"s", number(s.state.s)},
        {"alpha", number(s.state.alpha)},
        {"beta", number(s.state.beta)},
        {"gamma", number(s.state.gamma)},
        {"mu", number(s.state.mu)},
        {"chi1", number(s.chi1)},
        {"chi2", number(s.chi2)},
        {"res_cd2", number(s.residuals.cd2)},
        {"res_cd6", number(s.residuals.cd6)},
        {"res_ga1", number(s.residuals.ga1)},
    });
  }
  const ResidualSummary& rs = trajectory.residual_summary;
  ordered_json j{
      {"step", number(trajectory.step)},
      {"stop", stop_reason_name(trajectory.stop)},
      {"residual_summary",
       {{"max_cd2", number(rs.max_cd2)},
        {"max_cd6", number(rs.max_cd6)},
        {"max_ga1", number(rs.max_ga1)},
        {"max_constraint", number(rs.max_constraint)}}},
      {"samples", std::move(samples)},
  };
  return j.dump(indent);
}

std::string to_json(const EliminationReport& report,
                    const DerivedPolys* derived, int indent) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : report.extracted_factors) {
    factors.push_back({{"label", f.label},
                       {"factor", f.factor.to_string()},
                       {"multiplicity", f.multiplicity}});
  }
  ordered_json j{
      {"f_divides", report.f_divides},
      {"f_remainder", report.f_remainder.to_string()},
      {"reconstructs", report.reconstructs},
      {"extracted_factors", std::move(factors)},
      {"cofactor", report.cofactor.to_string()},
      {"resultant_terms", report.resultant.size()},
      {"resultant_total_degree", report.resultant.total_degree()},
      {"eq8_sign", report.eq8_sign > 0 ? "+" : "-"},
      {"eq7_consistent", report.eq7_consistent},
      {"eq8_consistent", report.eq8_consistent},
      {"eq9_consistent", report.eq9_consistent},
  };
  if (derived != nullptr) {
    j["f"] = printed_f().to_string();
    j["g"] = derived->g.to_string();
    j["p"] = derived->p.to_string();
    j["p_nonzero"] = !derived->p.is_zero();
  }
  return j.dump(indent);
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::ostringstream os;
  os << kTrajectoryCsvHeader << '\n';
  for (const auto& s : trajectory.samples) {
    os << format15(s.state.s) << ',' << format15(s.state.alpha) << ','
       << format15(s.state.beta) << ',' << format15(s.state.gamma) << ','
       << format15(s.state.mu) << ',' << format15(s.chi1) << ','
       << format15(s.chi2) << ',' << format15(s.residuals.cd2) << ','
       << format15(s.residuals.cd6) << ',' << format15(s.residuals.ga1)
       << '\n';
  }
  return os.str();
}

}  // namespace rhlab
