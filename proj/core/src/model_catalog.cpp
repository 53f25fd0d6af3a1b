#include "rhlab/model_catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rhlab/errors.hpp"

namespace rhlab {
namespace {

constexpr std::array<Family, 9> kAllFamilies = {
    Family::CP2_A1_sphere,     Family::CP2_B_tube,
    Family::CH2_A0_horosphere, Family::CH2_A10_sphere,
    Family::CH2_A11_tube,      Family::CH2_B_tube,
    Family::RuledMinimal,      Family::LohnherrEquidistant,
    Family::TanProfile2Hopf,
};

constexpr std::array<Family, 6> kHopfFamilies = {
    Family::CP2_A1_sphere,     Family::CP2_B_tube,
    Family::CH2_A0_horosphere, Family::CH2_A10_sphere,
    Family::CH2_A11_tube,      Family::CH2_B_tube,
};

double coth(double x) { return 1.0 / std::tanh(x); }
double cot(double x) { return 1.0 / std::tan(x); }

void require_sign(const ModelPoint& point) {
  if (point.c == 0.0 || !std::isfinite(point.c)) {
    throw DomainError("c must be finite and nonzero");
  }
  const int sign = required_curvature_sign(point.family);
  if (sign > 0 && point.c < 0.0) {
    throw DomainError(std::string(family_name(point.family)) +
                      " lives in CP^2 and needs c > 0");
  }
  if (sign < 0 && point.c > 0.0) {
    throw DomainError(std::string(family_name(point.family)) +
                      " lives in CH^2 and needs c < 0");
  }
}

void require_radius(const ModelPoint& point) {
  if (point.family == Family::CH2_A0_horosphere) {
    return;
  }
  const Interval range = radius_range(point.family, point.c);
  if (!(point.param > range.lo && point.param < range.hi)) {
    throw DomainError("radius " + std::to_string(point.param) +
                      " outside the open interval (" +
                      std::to_string(range.lo) + ", " +
                      std::to_string(range.hi) + ") for " +
                      std::string(family_name(point.family)));
  }
}

double tan_profile_rate(double c) { return std::sqrt(27.0 * c / 8.0); }

void validate(const ModelPoint& point) {
  require_sign(point);
  switch (point.family) {
    case Family::RuledMinimal:
      if (point.param == 0.0 || !std::isfinite(point.param)) {
        throw DomainError("RuledMinimal needs a finite nonzero beta");
      }
      return;
    case Family::LohnherrEquidistant:
      if (!(point.param > -1.0 && point.param < 1.0)) {
        throw DomainError("LohnherrEquidistant needs -1 < u < 1");
      }
      return;
    case Family::TanProfile2Hopf: {
      const double k = tan_profile_rate(point.c);
      const double phase = k * point.param + point.param2;
      if (!std::isfinite(phase) || std::abs(std::cos(phase)) < 1e-12) {
        throw DomainError("TanProfile2Hopf: s sits on a pole of tan");
      }
      return;
    }
    default:
      require_radius(point);
  }
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::CP2_A1_sphere: return "CP2_A1_sphere";
    case Family::CP2_B_tube: return "CP2_B_tube";
    case Family::CH2_A0_horosphere: return "CH2_A0_horosphere";
    case Family::CH2_A10_sphere: return "CH2_A10_sphere";
    case Family::CH2_A11_tube: return "CH2_A11_tube";
    case Family::CH2_B_tube: return "CH2_B_tube";
    case Family::RuledMinimal: return "RuledMinimal";
    case Family::LohnherrEquidistant: return "LohnherrEquidistant";
    case Family::TanProfile2Hopf: return "TanProfile2Hopf";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::span<const Family> all_families() { return kAllFamilies; }
std::span<const Family> hopf_families() { return kHopfFamilies; }

bool is_hopf_family(Family family) {
  for (Family f : kHopfFamilies) {
    if (f == family) return true;
  }
  return false;
}

int required_curvature_sign(Family family) {
  switch (family) {
    case Family::CP2_A1_sphere:
    case Family::CP2_B_tube:
    case Family::TanProfile2Hopf:
      return 1;
    case Family::RuledMinimal:
      return 0;
    default:
      return -1;
  }
}

Interval radius_range(Family family, double c) {
  const double root = std::sqrt(std::abs(c));
  switch (family) {
    case Family::CP2_A1_sphere:
      return {0.0, std::numbers::pi / (2.0 * root)};
    case Family::CP2_B_tube:
      return {0.0, std::numbers::pi / (4.0 * root)};
    case Family::CH2_A0_horosphere:
    case Family::CH2_A10_sphere:
    case Family::CH2_A11_tube:
    case Family::CH2_B_tube:
      return {0.0, std::numeric_limits<double>::infinity()};
    default:
      throw PreconditionError(std::string(family_name(family)) +
                              " is not parametrized by a radius");
  }
}

std::string_view pairing_name(PhiPairing pairing) {
  switch (pairing) {
    case PhiPairing::reeb: return "reeb";
    case PhiPairing::phi_invariant: return "phi-invariant";
    case PhiPairing::phi_pair: return "phi-pair";
    case PhiPairing::d_block: return "d-block";
    case PhiPairing::phi_x: return "phi-x";
  }
  return "unknown";
}

HopfTriple hopf_curvatures(const ModelPoint& point) {
  if (!is_hopf_family(point.family)) {
    throw PreconditionError(std::string(family_name(point.family)) +
                            " is not a Hopf family");
  }
  validate(point);
  const double k = std::sqrt(std::abs(point.c));
  const double x = k * point.param;
  switch (point.family) {
    case Family::CP2_A1_sphere: {
      const double lambda = k * cot(x);
      return {2.0 * k * cot(2.0 * x), lambda, lambda};
    }
    case Family::CP2_B_tube:
      return {2.0 * k * std::tan(2.0 * x), -k * cot(x), k * std::tan(x)};
    case Family::CH2_A0_horosphere:
      return {2.0 * k, k, k};
    case Family::CH2_A10_sphere: {
      const double lambda = k * coth(x);
      return {2.0 * k * coth(2.0 * x), lambda, lambda};
    }
    case Family::CH2_A11_tube: {
      const double lambda = k * std::tanh(x);
      return {2.0 * k * coth(2.0 * x), lambda, lambda};
    }
    case Family::CH2_B_tube:
      return {2.0 * k * std::tanh(2.0 * x), k * coth(x), k * std::tanh(x)};
    default:
      break;
  }
  throw PreconditionError("unreachable family");
}

ShapeState shape_state(const ModelPoint& point) {
  validate(point);
  Matrix a = Matrix::Zero(3, 3);
  switch (point.family) {
    case Family::RuledMinimal:
      a(0, 1) = a(1, 0) = point.param;
      break;
    case Family::LohnherrEquidistant: {
      const double scale = std::sqrt(-point.c);
      const double u = point.param;
      a(0, 0) = scale * (3.0 * u - u * u * u);
      a(0, 1) = a(1, 0) = scale * std::pow(1.0 - u * u, 1.5);
      a(1, 1) = scale * u * u * u;
      a(2, 2) = scale * u;
      break;
    }
    case Family::TanProfile2Hopf: {
      const double k = tan_profile_rate(point.c);
      const double unit = std::sqrt(point.c / 8.0);
      a(0, 0) = -7.0 * unit;
      a(0, 1) = a(1, 0) = k * std::tan(k * point.param + point.param2);
      a(1, 1) = unit;
      a(2, 2) = -std::sqrt(point.c / 2.0);
      break;
    }
    default: {
      const HopfTriple h = hopf_curvatures(point);
      a(0, 0) = h.delta;
      a(1, 1) = h.lambda1;
      a(2, 2) = h.lambda2;
    }
  }
  return ShapeState(AdaptedFrame::standard(2), std::move(a));
}

PrincipalSpectrum spectrum(const ModelPoint& point) {
  PrincipalSpectrum out;
  out.point = point;
  switch (point.family) {
    case Family::CP2_A1_sphere:
    case Family::CH2_A0_horosphere:
    case Family::CH2_A10_sphere:
    case Family::CH2_A11_tube: {
      const HopfTriple h = hopf_curvatures(point);
      out.curvatures = {{"delta", h.delta, 1, PhiPairing::reeb},
                        {"lambda", h.lambda1, 2, PhiPairing::phi_invariant}};
      break;
    }
    case Family::CP2_B_tube:
    case Family::CH2_B_tube: {
      const HopfTriple h = hopf_curvatures(point);
      out.curvatures = {{"delta", h.delta, 1, PhiPairing::reeb},
                        {"lambda1", h.lambda1, 1, PhiPairing::phi_pair},
                        {"lambda2", h.lambda2, 1, PhiPairing::phi_pair}};
      break;
    }
    default: {
      // Non-Hopf: A preserves span{xi, X}; diagonalize that block.
      const ShapeState state = shape_state(point);
      const SymmetricEigen eig = jacobi_eigen(state.a().topLeftCorner(2, 2));
      out.curvatures = {
          {"kappa_minus", eig.values(0), 1, PhiPairing::d_block},
          {"kappa_plus", eig.values(1), 1, PhiPairing::d_block},
          {"mu", state.a()(2, 2), 1, PhiPairing::phi_x}};
    }
  }
  return out;
}

std::string_view direction_name(FrameDirection direction) {
  switch (direction) {
    case FrameDirection::xi: return "xi";
    case FrameDirection::e2: return "e2";
    case FrameDirection::e3: return "e3";
  }
  return "unknown";
}

std::optional<FrameDirection> parse_direction(std::string_view name) {
  for (FrameDirection d : kFrameDirections) {
    if (direction_name(d) == name) return d;
  }
  return std::nullopt;
}

Vector direction_vector(FrameDirection direction) {
  return Vector::Unit(3, static_cast<int>(direction));
}

FamilyCheck verify_equality_direction(const ModelPoint& point, double tol) {
  const ShapeState state = shape_state(point);
  const SpaceFormParams sf(2, point.c);

  FamilyCheck check;
  check.point = point;
  std::array<BoundReport, 3> reports;
  std::size_t best = 0;
  for (std::size_t i = 0; i < kFrameDirections.size(); ++i) {
    reports[i] =
        ricci_upper_bound(state, sf, direction_vector(kFrameDirections[i]), tol);
    check.residuals[i] = reports[i].trace_b - 3.0 * reports[i].mu;
    if (!check.equality_direction && reports[i].equality) {
      check.equality_direction = kFrameDirections[i];
    }
    if (std::abs(check.residuals[i]) < std::abs(check.residuals[best])) {
      best = i;
    }
  }
  if (check.equality_direction) {
    best = static_cast<std::size_t>(*check.equality_direction);
  }
  check.residual_direction = kFrameDirections[best];
  check.condition_residual = check.residuals[best];
  check.report = reports[best];
  return check;
}

}  // namespace rhlab
