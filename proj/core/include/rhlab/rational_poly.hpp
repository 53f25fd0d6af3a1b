#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rhlab {

inline constexpr std::size_t kMaxVariables = 8;

/// Interned polynomial variable.  The first five slots are fixed; other
/// names are registered on first use, up to kMaxVariables in total.
class Variable {
 public:
  constexpr explicit Variable(std::uint8_t index) : index_(index) {}

  static Variable named(std::string_view name);
  static std::optional<Variable> lookup(std::string_view name);

  std::size_t index() const { return index_; }
  std::string name() const;

  friend constexpr bool operator==(Variable, Variable) = default;

 private:
  std::uint8_t index_;
};

inline constexpr Variable kBeta{0};
inline constexpr Variable kGamma{1};
inline constexpr Variable kMu{2};
inline constexpr Variable kC{3};
inline constexpr Variable kChi1{4};

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exponents{};

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides()
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic "comes first" ordering (descending).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.  Terms
/// are kept in descending graded-lex order with no zero coefficients, so
/// structural equality is mathematical equality.
class RationalPoly {
 public:
  struct Term {
    Monomial monomial;
    mpq_class coeff;
  };

  RationalPoly() = default;
  RationalPoly(const mpq_class& constant);  // NOLINT: implicit by design of ring
  RationalPoly(long constant);              // NOLINT

  static RationalPoly variable(Variable v);
  static RationalPoly term(const mpq_class& coeff, const Monomial& m);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const;
  mpq_class coefficient(const Monomial& m) const;

  int degree(Variable v) const;  // -1 for the zero polynomial
  unsigned total_degree() const;
  std::vector<Variable> variables() const;

  /// coefficients(v)[k] is the coefficient of v^k (free of v).
  std::vector<RationalPoly> coefficients(Variable v) const;
  static RationalPoly from_coefficients(Variable v,
                                        const std::vector<RationalPoly>& cs);

  RationalPoly derivative(Variable v) const;
  RationalPoly substitute(Variable v, const RationalPoly& value) const;
  RationalPoly evaluate(Variable v, const mpq_class& value) const;
  RationalPoly pow(unsigned exponent) const;

  /// Scaled to integer coefficients with unit gcd and positive leading
  /// coefficient.
  RationalPoly primitive_part() const;

  /// Canonical text: graded-lex order, '*' products, '^' exponents.
  std::string to_string() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) {
    return a += b;
  }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) {
    return a -= b;
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b);

 private:
  explicit RationalPoly(std::vector<Term> sorted_terms)
      : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;

  friend struct PolyBuilder;
};

struct DivisionResult {
  RationalPoly quotient;
  RationalPoly remainder;
};

/// Multivariate division by a single divisor in graded-lex order.
DivisionResult divide(const RationalPoly& dividend, const RationalPoly& divisor);

/// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<RationalPoly> divide_exact(const RationalPoly& dividend,
                                         const RationalPoly& divisor);

/// True when a = k * b for some nonzero rational k.
bool proportional(const RationalPoly& a, const RationalPoly& b);

/// Parses expressions built from rationals, variable names, + - * ^ and
/// parentheses, e.g. "4608*gamma^8 - 28032*mu*gamma^7".  Throws
/// PreconditionError on malformed input.
RationalPoly parse_poly(std::string_view text);

}  // namespace rhlab
