#include "rsthl/scalar/parse.hpp"

#include <cctype>
#include <string>

#include "rsthl/error.hpp"

namespace rsthl {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction divisor = unary();
        if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
        acc /= divisor;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    const mpz_class exponent = integer_literal();
    if (!exponent.fits_slong_p() || exponent > 4096) {
      pos_ = start;
      fail("exponent too large");
    }
    long e = exponent.get_si();
    if (negative) {
      if (base.is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
      base = base.inverse();
    }
    RationalFunction out(1L);
    for (; e > 0; e >>= 1) {
      if (e & 1) out *= base;
      if (e > 1) base *= base;
    }
    return out;
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer_literal()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name != "mu") {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return RationalFunction::mu();
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  mpz_class integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace rsthl
