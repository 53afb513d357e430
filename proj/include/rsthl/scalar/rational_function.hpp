#ifndef RSTHL_SCALAR_RATIONAL_FUNCTION_HPP
#define RSTHL_SCALAR_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "rsthl/scalar/polynomial.hpp"

namespace rsthl {

/// Element of Q(mu): a quotient of polynomials in the formal parameter mu.
///
/// Always stored in lowest terms with a monic denominator, so two values are
/// equal exactly when their representations are equal and zero is 0/1.
/// Values are immutable once built; every operation returns a new value.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int constant) : RationalFunction(static_cast<long>(constant)) {}  // NOLINT
  explicit RationalFunction(const Rational& constant) : num_(constant), den_(1) {}
  explicit RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}
  /// Throws Error(DivisionByZero) if the denominator is the zero polynomial.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  /// The formal parameter itself.
  static RationalFunction mu();
  static RationalFunction rational(long num, long den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the value does not depend on mu.
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// The constant value, if mu-free.
  std::optional<Rational> constant_value() const;

  /// Exact substitution mu := at. Throws Error(EvaluationAtPole) at a root of the denominator.
  Rational eval_at(const Rational& at) const;
  bool has_pole_at(const Rational& at) const { return sgn(den_(at)) == 0; }

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Canonical text "p(mu)/q(mu)" with integer coefficients; re-parses to the same value.
  std::string to_string() const;

private:
  struct Canonical {};
  RationalFunction(Polynomial numerator, Polynomial denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& x) noexcept { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const RationalFunction& x);

using Scalar = RationalFunction;

}  // namespace rsthl

#endif  // RSTHL_SCALAR_RATIONAL_FUNCTION_HPP
