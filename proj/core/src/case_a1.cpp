#include "rhlab/case_a1.hpp"

#include <string>

#include "rhlab/errors.hpp"
#include "rhlab/resultant.hpp"

namespace rhlab {
namespace {

const char* const kEq2 = "beta*chi1 - beta^2 + 3*gamma*mu - 2*gamma^2 + c";

const char* const kEq7 =
    "4*beta^4*(4*gamma - mu)"
    " + beta^2*(16*gamma^3 + 2*c*mu - 56*gamma^2*mu + 48*gamma*mu^2 - 9*mu^3)"
    " - mu*(c - 2*gamma^2 + 3*gamma*mu)^2";

const char* const kEq8Head =
    "4*beta^5*(59*gamma + 10*mu)"
    " + beta^3*(194*c*gamma + 376*gamma^3 - 32*c*mu - 1024*gamma^2*mu"
    " + 645*gamma*mu^2 + 36*mu^3)";

const char* const kEq8Middle =
    "beta*(92*gamma^5 - c^2*(gamma - 10*mu) - 656*gamma^4*mu"
    " + 1617*gamma^3*mu^2 - 1818*gamma^2*mu^3 + 918*gamma*mu^4 - 162*mu^5"
    " + 2*c*(50*gamma^3 - 152*gamma^2*mu + 129*gamma*mu^2 - 27*mu^3))";

const char* const kEq8Tail =
    " + (gamma - mu)*(44*beta^4 + beta^2*(2*c + 88*gamma^2 - 240*gamma*mu"
    " + 117*mu^2) + 2*c*(2*gamma^2 + 6*gamma*mu - 9*mu^2)"
    " - gamma*(4*gamma^3 + 24*gamma^2*mu - 81*gamma*mu^2 + 54*mu^3)"
    " - c^2)*chi1";

const char* const kEq9 =
    "4*beta^6*(-70*gamma + mu)"
    " + beta^4*(-552*gamma^3 + 1572*gamma^2*mu - 1134*gamma*mu^2 + 81*mu^3"
    " - 2*c*(76*gamma + 5*mu))"
    " + beta^2*(c^2*(4*gamma - 13*mu)"
    " - c*(20*gamma^3 + 22*gamma^2*mu - 123*gamma*mu^2 + 81*mu^3)"
    " - 3*(88*gamma^5 - 532*gamma^4*mu + 1140*gamma^3*mu^2"
    " - 1086*gamma^2*mu^3 + 441*gamma*mu^4 - 54*mu^5))"
    " - (gamma - mu)*(c - 2*gamma^2 - 15*gamma*mu + 18*mu^2)"
    "*(c - 2*gamma^2 + 3*gamma*mu)^2";

}  // namespace

CaseA1System build_case_a1_system(int eq8_sign) {
  if (eq8_sign != 1 && eq8_sign != -1) {
    throw PreconditionError("eq8_sign must be +1 or -1");
  }
  CaseA1System sys;
  sys.eq2 = parse_poly(kEq2);
  sys.eq7 = parse_poly(kEq7);
  sys.eq8 = parse_poly(std::string(kEq8Head) + (eq8_sign > 0 ? " + " : " - ") +
                       kEq8Middle + kEq8Tail);
  sys.eq9 = parse_poly(kEq9);
  sys.eq8_sign = eq8_sign;
  return sys;
}

const std::vector<PrintedTerm>& printed_f_terms() {
  static const std::vector<PrintedTerm> terms = {
      {4608, 8, 0, 0},    {-28032, 7, 1, 0},  {77760, 6, 2, 0},
      {-64, 6, 0, 1},     {-133248, 5, 3, 0}, {-3168, 5, 1, 1},
      {155520, 4, 4, 0},  {9696, 4, 2, 1},    {32, 4, 0, 2},
      {-121392, 3, 5, 0}, {-21176, 3, 3, 1},  {528, 3, 1, 2},
      {52920, 2, 6, 0},   {19500, 2, 4, 1},   {2640, 2, 2, 2},
      {-7938, 1, 7, 0},   {-2556, 1, 5, 1},   {-20, 1, 3, 2},
      {243, 0, 8, 0},     {216, 0, 6, 1},     {42, 0, 4, 2},
  };
  return terms;
}

RationalPoly printed_f() {
  RationalPoly f;
  for (const PrintedTerm& t : printed_f_terms()) {
    Monomial m;
    m.exponents[kGamma.index()] = static_cast<std::uint16_t>(t.gamma_exp);
    m.exponents[kMu.index()] = static_cast<std::uint16_t>(t.mu_exp);
    m.exponents[kC.index()] = static_cast<std::uint16_t>(t.c_exp);
    f += RationalPoly::term(t.coeff, m);
  }
  return f;
}

RationalPoly case_a_determinant() {
  const RationalPoly a11 = parse_poly("chi1 - 3*beta");
  const RationalPoly a12 = parse_poly("3*mu - 4*gamma");
  const RationalPoly a21 = parse_poly(
      "chi1^2 + 3*beta*chi1 - 12*beta^2 + 2*gamma^2 - 7*gamma*mu + 3*mu^2 + c");
  const RationalPoly a22 =
      parse_poly("2*((mu - 2*gamma)*chi1 + (6*mu - 10*gamma)*beta)");
  return a11 * a22 - a21 * a12;
}

RationalPoly chi1_numerator() {
  return parse_poly("beta^2 - 3*gamma*mu + 2*gamma^2 - c");
}

RationalPoly clear_chi1(const RationalPoly& p, const RationalPoly& numer) {
  const auto cs = p.coefficients(kChi1);
  if (cs.empty()) return {};
  const auto d = static_cast<unsigned>(cs.size() - 1);
  const RationalPoly beta = RationalPoly::variable(kBeta);
  RationalPoly out;
  for (unsigned k = 0; k <= d; ++k) {
    out += cs[k] * numer.pow(k) * beta.pow(d - k);
  }
  return out;
}

RationalPoly e3_derivative(const RationalPoly& p) {
  const RationalPoly e3_beta =
      parse_poly("beta^2 + gamma^2 - 3*gamma*mu + 3*mu^2 + c");
  const RationalPoly e3_gamma =
      parse_poly("(gamma - mu)*chi1 + beta*(gamma + 2*mu)");
  const RationalPoly third(mpq_class(1, 3));
  return p.derivative(kBeta) * e3_beta +
         (p.derivative(kGamma) + third * p.derivative(kMu)) * e3_gamma;
}

int strip_factor(RationalPoly& poly, const RationalPoly& factor) {
  if (factor.is_constant()) {
    throw PreconditionError("cannot strip a constant factor");
  }
  int multiplicity = 0;
  while (!poly.is_zero()) {
    auto q = divide_exact(poly, factor);
    if (!q) break;
    poly = std::move(*q);
    ++multiplicity;
  }
  return multiplicity;
}

EliminationReport verify_factorization() {
  EliminationReport report;
  CaseA1System sys = build_case_a1_system(+1);
  const RationalPoly numer = chi1_numerator();

  report.eq7_consistent = clear_chi1(case_a_determinant(), numer) == sys.eq7;
  auto eq8_checks = [&](const CaseA1System& s) {
    return proportional(e3_derivative(s.eq7), s.eq8) &&
           proportional(clear_chi1(s.eq8, numer), s.eq9);
  };
  if (!eq8_checks(sys)) {
    CaseA1System alternate = build_case_a1_system(-1);
    if (eq8_checks(alternate)) sys = std::move(alternate);
  }
  report.eq8_sign = sys.eq8_sign;
  report.eq8_consistent = proportional(e3_derivative(sys.eq7), sys.eq8);
  report.eq9_consistent = proportional(clear_chi1(sys.eq8, numer), sys.eq9);

  report.resultant = sylvester_resultant(sys.eq9, sys.eq7, kBeta);

  RationalPoly rest = report.resultant;
  const RationalPoly linear = parse_poly("4*gamma - 3*mu");
  const RationalPoly quadratic = parse_poly("c - 2*gamma^2 + 3*gamma*mu");
  const RationalPoly f = printed_f();

  report.extracted_factors.push_back(
      {"4*gamma - 3*mu", linear, strip_factor(rest, linear)});
  report.extracted_factors.push_back(
      {"c - 2*gamma^2 + 3*gamma*mu", quadratic, strip_factor(rest, quadratic)});
  report.f_remainder = divide(rest, f).remainder;
  report.f_divides = report.f_remainder.is_zero();
  report.extracted_factors.push_back({"f", f, strip_factor(rest, f)});
  report.cofactor = rest;

  RationalPoly product = report.cofactor;
  for (const auto& ef : report.extracted_factors) {
    product *= ef.factor.pow(static_cast<unsigned>(ef.multiplicity));
  }
  report.reconstructs = product == report.resultant;
  return report;
}

DerivedPolys derive_g_and_p(const RationalPoly& f) {
  DerivedPolys out;
  out.g = RationalPoly(3L) * f.derivative(kGamma) + f.derivative(kMu);
  out.p = sylvester_resultant(f, out.g, kGamma).primitive_part();
  return out;
}

DerivedPolys derive_g_and_p() { return derive_g_and_p(printed_f()); }

}  // namespace rhlab
