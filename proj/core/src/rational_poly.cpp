#include "rhlab/rational_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rhlab/errors.hpp"

namespace rhlab {
namespace {

struct Registry {
  std::mutex mutex;
  std::vector<std::string> names{"beta", "gamma", "mu", "c", "chi1"};
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Variable Variable::named(std::string_view name) {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return Variable(static_cast<std::uint8_t>(i));
  }
  if (r.names.size() >= kMaxVariables) {
    throw PreconditionError("too many polynomial variables (max " +
                            std::to_string(kMaxVariables) + ")");
  }
  r.names.emplace_back(name);
  return Variable(static_cast<std::uint8_t>(r.names.size() - 1));
}

std::optional<Variable> Variable::lookup(std::string_view name) {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return Variable(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

std::string Variable::name() const {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.at(index_);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exponents[i] = static_cast<std::uint16_t>(exponents[i] + other.exponents[i]);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exponents[i] = static_cast<std::uint16_t>(exponents[i] - other.exponents[i]);
  }
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

// Accumulates terms in any order and emits a canonical polynomial.
struct PolyBuilder {
  std::map<Monomial, mpq_class, GrlexGreater> acc;

  void add(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) acc.erase(it);
    }
  }

  RationalPoly build() {
    std::vector<RationalPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
    return RationalPoly(std::move(terms));
  }
};

RationalPoly::RationalPoly(const mpq_class& constant) {
  if (constant != 0) {
    mpq_class c = constant;
    c.canonicalize();
    terms_.push_back({Monomial{}, c});
  }
}

RationalPoly::RationalPoly(long constant) : RationalPoly(mpq_class(constant)) {}

RationalPoly RationalPoly::variable(Variable v) {
  Monomial m;
  m.exponents[v.index()] = 1;
  return term(1, m);
}

RationalPoly RationalPoly::term(const mpq_class& coeff, const Monomial& m) {
  if (coeff == 0) return {};
  return RationalPoly(std::vector<Term>{{m, coeff}});
}

bool RationalPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

const RationalPoly::Term& RationalPoly::leading_term() const {
  if (terms_.empty()) {
    throw PreconditionError("the zero polynomial has no leading term");
  }
  return terms_.front();
}

mpq_class RationalPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

int RationalPoly::degree(Variable v) const {
  int d = -1;
  for (const auto& t : terms_) {
    d = std::max(d, static_cast<int>(t.monomial.exponents[v.index()]));
  }
  return d;
}

unsigned RationalPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::vector<Variable> RationalPoly::variables() const {
  std::vector<Variable> out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const bool used = std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return t.monomial.exponents[i] != 0;
    });
    if (used) out.emplace_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

std::vector<RationalPoly> RationalPoly::coefficients(Variable v) const {
  const int d = degree(v);
  if (d < 0) return {};
  std::vector<PolyBuilder> parts(static_cast<std::size_t>(d) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    const auto k = m.exponents[v.index()];
    m.exponents[v.index()] = 0;
    parts[k].add(m, t.coeff);
  }
  std::vector<RationalPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(p.build());
  return out;
}

RationalPoly RationalPoly::from_coefficients(Variable v,
                                             const std::vector<RationalPoly>& cs) {
  PolyBuilder b;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (const auto& t : cs[k].terms()) {
      if (t.monomial.exponents[v.index()] != 0) {
        throw PreconditionError("coefficient must be free of the main variable");
      }
      Monomial m = t.monomial;
      m.exponents[v.index()] = static_cast<std::uint16_t>(k);
      b.add(m, t.coeff);
    }
  }
  return b.build();
}

RationalPoly RationalPoly::derivative(Variable v) const {
  PolyBuilder b;
  for (const auto& t : terms_) {
    const auto e = t.monomial.exponents[v.index()];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.exponents[v.index()] = static_cast<std::uint16_t>(e - 1);
    b.add(m, t.coeff * e);
  }
  return b.build();
}

RationalPoly RationalPoly::substitute(Variable v, const RationalPoly& value) const {
  const auto cs = coefficients(v);
  // Horner in the substituted variable.
  RationalPoly out;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    out = out * value + *it;
  }
  return out;
}

RationalPoly RationalPoly::evaluate(Variable v, const mpq_class& value) const {
  PolyBuilder b;
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    const auto e = m.exponents[v.index()];
    m.exponents[v.index()] = 0;
    mpq_class power = 1;
    for (unsigned i = 0; i < e; ++i) power *= value;
    b.add(m, t.coeff * power);
  }
  return b.build();
}

RationalPoly RationalPoly::pow(unsigned exponent) const {
  RationalPoly result(1L);
  RationalPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

RationalPoly RationalPoly::primitive_part() const {
  if (terms_.empty()) return {};
  mpz_class denominator_lcm = 1;
  for (const auto& t : terms_) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
            t.coeff.get_den_mpz_t());
  }
  mpz_class numerator_gcd = 0;
  for (const auto& t : terms_) {
    const mpz_class scaled = t.coeff.get_num() * (denominator_lcm / t.coeff.get_den());
    mpz_gcd(numerator_gcd.get_mpz_t(), numerator_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class factor(denominator_lcm, numerator_gcd);
  factor.canonicalize();
  if (terms_.front().coeff < 0) factor = -factor;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const mpq_class magnitude = negative ? mpq_class(-t.coeff) : t.coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    bool wrote = false;
    if (!unit || t.monomial.degree() == 0) {
      os << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      const auto e = t.monomial.exponents[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << Variable(static_cast<std::uint8_t>(i)).name();
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  GrlexGreater before;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && before(a->monomial, b->monomial))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || before(b->monomial, a->monomial)) {
      merged.push_back(*b++);
    } else {
      mpq_class sum = a->coeff + b->coeff;
      if (sum != 0) merged.push_back({a->monomial, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  return *this += -other;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& other) {
  *this = *this * other;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  PolyBuilder acc;
  mpq_class product;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      product = ta.coeff * tb.coeff;
      acc.add(ta.monomial * tb.monomial, product);
    }
  }
  return acc.build();
}

bool operator==(const RationalPoly& a, const RationalPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

namespace {

DivisionResult divide_impl(const RationalPoly& dividend,
                           const RationalPoly& divisor, bool stop_on_remainder,
                           bool& exact) {
  if (divisor.is_zero()) {
    throw PreconditionError("division by the zero polynomial");
  }
  const auto& lead = divisor.leading_term();
  PolyBuilder work;
  for (const auto& t : dividend.terms()) work.add(t.monomial, t.coeff);
  PolyBuilder quotient;
  PolyBuilder remainder;
  exact = true;
  while (!work.acc.empty()) {
    auto it = work.acc.begin();
    const Monomial m = it->first;
    const mpq_class coeff = it->second;
    if (!lead.monomial.divides(m)) {
      exact = false;
      if (stop_on_remainder) break;
      remainder.add(m, coeff);
      work.acc.erase(it);
      continue;
    }
    const Monomial qm = m / lead.monomial;
    const mpq_class qc = coeff / lead.coeff;
    quotient.add(qm, qc);
    for (const auto& t : divisor.terms()) {
      work.add(t.monomial * qm, -(qc * t.coeff));
    }
  }
  return {quotient.build(), remainder.build()};
}

}  // namespace

DivisionResult divide(const RationalPoly& dividend, const RationalPoly& divisor) {
  bool exact = true;
  return divide_impl(dividend, divisor, false, exact);
}

std::optional<RationalPoly> divide_exact(const RationalPoly& dividend,
                                         const RationalPoly& divisor) {
  bool exact = true;
  auto result = divide_impl(dividend, divisor, true, exact);
  if (!exact) return std::nullopt;
  return std::move(result.quotient);
}

bool proportional(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_term().coeff == b * a.leading_term().coeff;
}

}  // namespace rhlab
