#include <doctest.h>

#include <random>
#include <vector>

#include <gmpxx.h>

#include "rhlab/case_a1.hpp"
#include "rhlab/errors.hpp"
#include "rhlab/rational_poly.hpp"
#include "rhlab/resultant.hpp"

using namespace rhlab;

namespace {

RationalPoly P(const char* text) { return parse_poly(text); }

mpq_class random_q(std::mt19937_64& rng, long range = 20) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 9);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// Oracle: Gaussian elimination over Q with ordinary division.
mpq_class fraction_determinant(DenseMatrix<mpq_class> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

RationalPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  RationalPoly out;
  for (int t = 0; t < 5; ++t) {
    Monomial m;
    m.exponents[kBeta.index()] = static_cast<std::uint16_t>(deg(rng));
    m.exponents[kGamma.index()] = static_cast<std::uint16_t>(deg(rng) / 2);
    m.exponents[kMu.index()] = static_cast<std::uint16_t>(deg(rng) / 2);
    out += RationalPoly::term(random_q(rng), m);
  }
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK(P("(gamma + mu)*(gamma - mu)") == P("gamma^2 - mu^2"));
  CHECK(P("4608*gamma^8").derivative(kGamma) == P("36864*gamma^7"));
  const Variable alpha = Variable::named("alpha");
  const RationalPoly first = P("beta*(alpha + gamma - 3*mu)");
  CHECK(first.substitute(alpha, P("3*mu - gamma")).is_zero());
  CHECK(P("(beta + 1)^3") == P("beta^3 + 3*beta^2 + 3*beta + 1"));
  CHECK(P("1/2*gamma + 1/3*gamma") == P("5/6*gamma"));
  CHECK(P("gamma - gamma").is_zero());
}

TEST_CASE("canonical form and printing") {
  const RationalPoly p = P("mu*gamma^7 - 2 + gamma^8");
  CHECK(p.to_string() == "gamma^8 + gamma^7*mu - 2");
  CHECK(p.leading_term().coeff == 1);
  CHECK(P("-3/4*c^2*beta").to_string() == "-3/4*beta*c^2");
  CHECK(RationalPoly().to_string() == "0");
  for (const auto& t : p.terms()) CHECK(t.coeff != 0);
  CHECK_THROWS_AS(P("gamma +* mu"), PreconditionError);
  CHECK_THROWS_AS(P("(gamma"), PreconditionError);
}

TEST_CASE("coefficients and evaluation") {
  const RationalPoly p = P("beta^2*gamma + 3*beta - mu");
  const auto cs = p.coefficients(kBeta);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == P("-mu"));
  CHECK(cs[1] == P("3"));
  CHECK(cs[2] == P("gamma"));
  CHECK(RationalPoly::from_coefficients(kBeta, cs) == p);
  CHECK(p.evaluate(kBeta, 2).evaluate(kGamma, 1).evaluate(kMu, mpq_class(1, 2)) ==
        RationalPoly(mpq_class(19, 2)));
  CHECK(p.degree(kBeta) == 2);
  CHECK(p.degree(kC) == 0);
  CHECK(RationalPoly().degree(kBeta) == -1);
}

TEST_CASE("division") {
  const RationalPoly a = P("gamma^2 - mu^2");
  const auto q = divide_exact(a, P("gamma - mu"));
  REQUIRE(q.has_value());
  CHECK(*q == P("gamma + mu"));
  CHECK_FALSE(divide_exact(a, P("gamma + 2*mu")).has_value());
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const RationalPoly x = random_poly(rng, 3);
    const RationalPoly y = random_poly(rng, 2);
    if (y.is_zero()) continue;
    const DivisionResult d = divide(x * y + P("1"), y);
    CHECK(d.quotient * y + d.remainder == x * y + P("1"));
    const auto e = divide_exact(x * y, y);
    REQUIRE(e.has_value());
    CHECK(*e == x);
  }
  CHECK(proportional(P("2*gamma - 4*mu"), P("-gamma + 2*mu")));
  CHECK_FALSE(proportional(P("gamma"), P("mu")));
}

TEST_CASE("primitive part") {
  CHECK(P("-6*gamma + 9/2*mu").primitive_part() == P("4*gamma - 3*mu"));
}

TEST_CASE("resultant examples") {
  const Variable x = kBeta;
  const Variable a = kGamma;
  const Variable b = kMu;
  const RationalPoly xv = RationalPoly::variable(x);
  const RationalPoly r = sylvester_resultant(xv - RationalPoly::variable(a),
                                             xv - RationalPoly::variable(b), x);
  CHECK(proportional(r, RationalPoly::variable(a) - RationalPoly::variable(b)));
  CHECK(sylvester_resultant(xv * xv - RationalPoly(2L), xv - RationalPoly(1L), x) ==
        RationalPoly(-1L));
  CHECK_THROWS_AS(sylvester_resultant(xv, RationalPoly(3L), x), PreconditionError);
}

TEST_CASE("bareiss equals fraction elimination") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 6;
    DenseMatrix<mpq_class> m(n, std::vector<mpq_class>(n));
    for (auto& row : m)
      for (auto& e : row) e = (rng() % 4 == 0) ? mpq_class(0) : random_q(rng);
    CHECK(bareiss_determinant(m) == fraction_determinant(m));
  }
  DenseMatrix<mpq_class> singular{{1, 2}, {2, 4}};
  CHECK(bareiss_determinant(singular) == 0);
}

TEST_CASE("resultant commutes with specialization") {
  std::mt19937_64 rng(53);
  int trials = 0;
  while (trials < 50) {
    const RationalPoly p = random_poly(rng, 3);
    const RationalPoly q = random_poly(rng, 3);
    // Specialization is only faithful when leading coefficients survive.
    if (p.degree(kBeta) < 1 || q.degree(kBeta) < 1) continue;
    const mpq_class g = random_q(rng), m = random_q(rng);
    auto special = [&](const RationalPoly& x) { return x.evaluate(kGamma, g).evaluate(kMu, m); };
    const RationalPoly ps = special(p), qs = special(q);
    if (ps.degree(kBeta) != p.degree(kBeta) || qs.degree(kBeta) != q.degree(kBeta)) continue;
    CHECK(special(sylvester_resultant(p, q, kBeta)) == sylvester_resultant(ps, qs, kBeta));
    ++trials;
  }
}

TEST_CASE("quadratic identity as polynomials") {
  // x1, x2, x3 played by beta, gamma, mu.
  const RationalPoly lhs = P("(beta + gamma + mu)^2 - 8*(mu*(beta + gamma) - mu^2)");
  CHECK((lhs - P("(beta + gamma - 3*mu)^2")).is_zero());
}

TEST_CASE("elimination system transcription") {
  const CaseA1System sys = build_case_a1_system();
  const RationalPoly eq2 = sys.eq2.evaluate(kBeta, 1).evaluate(kGamma, 1).evaluate(kMu, 1)
                               .evaluate(kC, -2).evaluate(kChi1, 0);
  CHECK(eq2 == RationalPoly(-2L));
  CHECK(sys.eq7.evaluate(kMu, 0) == P("16*beta^4*gamma + 16*beta^2*gamma^3"));
  // chi1 solved from eq2 annihilates it.
  CHECK(clear_chi1(sys.eq2, chi1_numerator()).is_zero());
  CHECK(chi1_numerator() == P("beta^2 - 3*gamma*mu + 2*gamma^2 - c"));
  CHECK(sys.eq7 == clear_chi1(case_a_determinant(), chi1_numerator()));
  CHECK(proportional(e3_derivative(sys.eq7), sys.eq8));
  CHECK(proportional(clear_chi1(sys.eq8, chi1_numerator()), sys.eq9));
  CHECK_FALSE(proportional(e3_derivative(sys.eq7), build_case_a1_system(-1).eq8));
}

TEST_CASE("printed f") {
  const RationalPoly f = printed_f();
  CHECK(f.size() == 21);
  CHECK(printed_f_terms().size() == 21);
  CHECK(f.evaluate(kMu, 0).evaluate(kC, 0) == P("4608*gamma^8"));
  const auto by_gamma = f.coefficients(kGamma);
  CHECK(by_gamma[6] == P("77760*mu^2 - 64*c"));
  CHECK(f.to_string().rfind("4608*gamma^8 - 28032*gamma^7*mu + ", 0) == 0);
}

TEST_CASE("factorization of the resultant") {
  const EliminationReport r = verify_factorization();
  CHECK(r.f_divides);
  CHECK(r.f_remainder.is_zero());
  CHECK(r.reconstructs);
  CHECK(r.eq8_sign == 1);
  CHECK(r.eq7_consistent);
  CHECK(r.eq8_consistent);
  CHECK(r.eq9_consistent);
  REQUIRE(r.extracted_factors.size() == 3);
  CHECK(r.extracted_factors[0].multiplicity >= 1);
  CHECK(r.extracted_factors[1].multiplicity >= 3);
  CHECK(r.extracted_factors[2].multiplicity >= 1);
  CHECK(r.cofactor.degree(kGamma) == 0);
  CHECK(r.cofactor.degree(kMu) == 0);
  CHECK(r.cofactor == P("1024*c^2"));
}

TEST_CASE("g and p") {
  const DerivedPolys d = derive_g_and_p();
  const RationalPoly f = printed_f();
  CHECK(d.g == RationalPoly(3L) * f.derivative(kGamma) + f.derivative(kMu));
  CHECK(d.g.degree(kGamma) == 7);
  CHECK_FALSE(proportional(d.g, f));
  Monomial g7;
  g7.exponents[kGamma.index()] = 7;
  CHECK((RationalPoly(3L) * f.derivative(kGamma)).coefficient(g7) == 110592);
  CHECK(d.g.coefficient(g7) == 110592 - 28032);
  CHECK_FALSE(d.p.is_zero());
  CHECK(d.p.degree(kGamma) == 0);
  CHECK(d.p.degree(kMu) > 0);
  CHECK(d.p == d.p.primitive_part());
}
