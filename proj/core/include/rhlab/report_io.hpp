#pragma once

#include <string>

#include "rhlab/case_a1.hpp"
#include "rhlab/model_catalog.hpp"
#include "rhlab/radius_solver.hpp"
#include "rhlab/ricci_bound.hpp"
#include "rhlab/twohopf_ode.hpp"

namespace rhlab {

/// Rounds to 15 significant digits, the precision of every number the
/// reports print.
double round15(double value);
std::string format15(double value);

std::string to_json(const BoundReport& report, int indent = 2);
std::string to_json(const PrincipalSpectrum& spectrum, int indent = 2);
std::string to_json(const FamilyCheck& check, int indent = 2);
std::string to_json(const RadiusSolution& solution, const RootProblem& problem,
                    int indent = 2);
std::string to_json(const Trajectory& trajectory, int indent = 2);
/// When `derived` is given, f, g and p are included as canonical text.
std::string to_json(const EliminationReport& report,
                    const DerivedPolys* derived = nullptr, int indent = 2);

/// Header: s,alpha,beta,gamma,mu,chi1,chi2,res_cd2,res_cd6,res_ga1
std::string trajectory_csv(const Trajectory& trajectory);

inline constexpr const char* kTrajectoryCsvHeader =
    "s,alpha,beta,gamma,mu,chi1,chi2,res_cd2,res_cd6,res_ga1";

}  // namespace rhlab
