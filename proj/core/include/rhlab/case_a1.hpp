#pragma once

#include <string>
#include <vector>

#include "rhlab/rational_poly.hpp"

namespace rhlab {

/// The non-Hopf elimination system in (beta, gamma, mu, c, chi1).
struct CaseA1System {
  RationalPoly eq2;
  RationalPoly eq7;
  RationalPoly eq8;
  RationalPoly eq9;
  int eq8_sign = +1;  // operator joining the beta[...] group of eq8
};

/// Builds the system as transcribed.  `eq8_sign` selects the operator in
/// front of the beta[92 gamma^5 ...] group, which the printed display omits.
CaseA1System build_case_a1_system(int eq8_sign = +1);

/// f(gamma, mu) with its printed coefficients, in printed order.
struct PrintedTerm {
  long coeff;
  unsigned gamma_exp;
  unsigned mu_exp;
  unsigned c_exp;
};
const std::vector<PrintedTerm>& printed_f_terms();
RationalPoly printed_f();

/// Entries of the 2x2 system a11 .. a22 acting on (xi beta, xi gamma).
RationalPoly case_a_determinant();

/// beta^d * P(chi1 := numer / beta) for P of degree d in chi1.
RationalPoly clear_chi1(const RationalPoly& p, const RationalPoly& numer);

/// chi1 * beta from eq2: beta^2 - 3 gamma mu + 2 gamma^2 - c.
RationalPoly chi1_numerator();

/// e3 applied to a polynomial in (beta, gamma, mu, c) via the chain rule
/// with e3 beta, e3 gamma from the constant-alpha relations and e3 mu = e3 gamma / 3.
RationalPoly e3_derivative(const RationalPoly& p);

struct ExtractedFactor {
  std::string label;
  RationalPoly factor;
  int multiplicity = 0;
};

struct EliminationReport {
  RationalPoly resultant;
  std::vector<ExtractedFactor> extracted_factors;
  RationalPoly cofactor;
  bool f_divides = false;
  RationalPoly f_remainder;   // remainder of the first division by f
  bool reconstructs = false;  // product of factors * cofactor == resultant
  int eq8_sign = +1;
  bool eq7_consistent = false;  // eq7 == chi1-eliminated a11 a22 - a12 a21
  bool eq8_consistent = false;  // eq8 proportional to e3(eq7)
  bool eq9_consistent = false;  // eq9 proportional to chi1-eliminated eq8
};

/// Computes Res_beta(eq9, eq7), strips (4 gamma - 3 mu),
/// (c - 2 gamma^2 + 3 gamma mu) and the printed f to their maximal
/// multiplicities, and reports what is left.
EliminationReport verify_factorization();

struct DerivedPolys {
  RationalPoly g;  // 3 f_gamma + f_mu
  RationalPoly p;  // primitive part of Res_gamma(f, g)
};

DerivedPolys derive_g_and_p(const RationalPoly& f);
DerivedPolys derive_g_and_p();

/// Divides out `factor` as many times as it goes.  Returns the multiplicity
/// and leaves the cofactor in `poly`.
int strip_factor(RationalPoly& poly, const RationalPoly& factor);

}  // namespace rhlab
