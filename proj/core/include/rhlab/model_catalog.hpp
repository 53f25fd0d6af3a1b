#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhlab/geom_core.hpp"
#include "rhlab/ricci_bound.hpp"

namespace rhlab {

/// Model hypersurface families in complex dimension 2.  The string forms
/// returned by `family_name` are stable identifiers used by the CLI and the
/// JSON reports.
enum class Family {
  CP2_A1_sphere,
  CP2_B_tube,
  CH2_A0_horosphere,
  CH2_A10_sphere,
  CH2_A11_tube,
  CH2_B_tube,
  RuledMinimal,
  LohnherrEquidistant,
  TanProfile2Hopf,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
std::span<const Family> all_families();
std::span<const Family> hopf_families();
bool is_hopf_family(Family family);

/// Which ambient form a family lives in: +1 for CP^2, -1 for CH^2, 0 for
/// either.
int required_curvature_sign(Family family);

/// A point in a family's parameter space.
///   Hopf tubes/spheres: param = radius r (ignored by the horosphere)
///   RuledMinimal:       param = beta (nonzero)
///   LohnherrEquidistant: param = u in (-1, 1)
///   TanProfile2Hopf:     param = s, param2 = d
struct ModelPoint {
  Family family = Family::CP2_A1_sphere;
  double param = 0.0;
  double param2 = 0.0;
  double c = 1.0;
};

/// Open interval of legal radii for the Hopf families with a radius.
struct Interval {
  double lo;
  double hi;
};
Interval radius_range(Family family, double c);

enum class PhiPairing {
  reeb,          // the xi direction
  phi_invariant, // eigenspace invariant under phi
  phi_pair,      // one of two eigenvectors exchanged by phi
  d_block,       // eigenvector inside span{xi, X} of a non-Hopf family
  phi_x,         // the phi X direction of a non-Hopf family
};

std::string_view pairing_name(PhiPairing pairing);

struct PrincipalCurvature {
  std::string name;
  double value = 0.0;
  int multiplicity = 1;
  PhiPairing pairing = PhiPairing::reeb;
};

struct PrincipalSpectrum {
  ModelPoint point;
  std::vector<PrincipalCurvature> curvatures;
};

/// Principal curvatures of a Hopf family: delta on xi, lambda1 on e2,
/// lambda2 on e3 = phi e2 (lambda1 == lambda2 for the A types).
struct HopfTriple {
  double delta;
  double lambda1;
  double lambda2;
};

HopfTriple hopf_curvatures(const ModelPoint& point);

PrincipalSpectrum spectrum(const ModelPoint& point);

/// 3x3 shape operator in the frame (xi, e2, e3 = phi e2).
ShapeState shape_state(const ModelPoint& point);

enum class FrameDirection { xi, e2, e3 };
inline constexpr std::array<FrameDirection, 3> kFrameDirections = {
    FrameDirection::xi, FrameDirection::e2, FrameDirection::e3};

std::string_view direction_name(FrameDirection direction);
std::optional<FrameDirection> parse_direction(std::string_view name);
Vector direction_vector(FrameDirection direction);

struct FamilyCheck {
  ModelPoint point;
  /// Tr B - 3 mu for each frame direction, in the order xi, e2, e3.
  std::array<double, 3> residuals{};
  /// Residual of the reported direction (equality direction if any,
  /// otherwise the direction with the smallest |residual|).
  double condition_residual = 0.0;
  FrameDirection residual_direction = FrameDirection::xi;
  /// First frame direction in which the Ricci bound is attained.
  std::optional<FrameDirection> equality_direction;
  BoundReport report;  // at residual_direction
};

FamilyCheck verify_equality_direction(const ModelPoint& point,
                                      double tol = kDefaultTolerance);

}  // namespace rhlab
