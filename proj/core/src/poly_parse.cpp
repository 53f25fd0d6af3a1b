#include <cctype>
#include <string>

#include "rhlab/errors.hpp"
#include "rhlab/rational_poly.hpp"

namespace rhlab {
namespace {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := number ('/' number)? | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalPoly parse() {
    RationalPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("polynomial parse error at offset " +
                            std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPoly expr() {
    RationalPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalPoly term() {
    RationalPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  RationalPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalPoly power() {
    RationalPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected an exponent");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  RationalPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      RationalPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      if (accept('/')) {
        skip_space();
        const std::string d = read_digits();
        if (d.empty()) fail("expected a denominator");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      mpq_class value(num, den);
      value.canonicalize();
      return RationalPoly(value);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      return RationalPoly::variable(
          Variable::named(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }
};

}  // namespace

RationalPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace rhlab
