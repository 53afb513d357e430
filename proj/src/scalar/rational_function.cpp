#include "rsthl/scalar/rational_function.hpp"

#include <ostream>
#include <utility>

#include "rsthl/error.hpp"

namespace rsthl {

namespace {

bool is_single_term(const Polynomial& p) {
  int terms = 0;
  for (const auto& c : p.coefficients())
    if (sgn(c) != 0) ++terms;
  return terms <= 1;
}

// A single factor with no sign and no explicit coefficient product, e.g. "3" or "mu^2".
bool is_atomic(const Polynomial& p) {
  if (!is_single_term(p)) return false;
  if (p.is_constant()) return sgn(p.leading()) > 0;
  return p.leading() == 1;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator is the zero polynomial");
  normalize();
}

RationalFunction RationalFunction::mu() { return RationalFunction(Polynomial{0, 1}); }

RationalFunction RationalFunction::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return RationalFunction(value);
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<Rational> RationalFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.coefficient(0);
}

Rational RationalFunction::eval_at(const Rational& at) const {
  Rational d = den_(at);
  if (sgn(d) == 0) throw Error(ErrorCode::EvaluationAtPole, "denominator vanishes at mu = " + at.get_str());
  Rational out = num_(at) / d;
  out.canonicalize();
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    if (den_.is_constant()) {
      if (num_.is_zero()) den_ = Polynomial(1);
      return *this;
    }
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RationalFunction();
  num_ *= other.num_;
  den_ *= other.den_;
  if (!den_.is_constant()) normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return *this *= other.inverse();
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.num_, a.den_, RationalFunction::Canonical{});
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  // Scale numerator and denominator by a common rational so every coefficient
  // is an integer and the combined content is one.
  mpz_class common_den = 1;
  mpz_class content = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& c : p->coefficients()) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto* p : {&num_, &den_})
    for (const auto& c : p->coefficients()) {
      mpz_class scaled = c.get_num() * (common_den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  Rational scale(common_den, content);
  scale.canonicalize();
  Polynomial p = num_;
  Polynomial q = den_;
  p *= scale;
  q *= scale;

  std::string top = p.to_string();
  if (q == Polynomial(1)) return top;
  if (!is_single_term(p)) top = "(" + top + ")";
  std::string bottom = q.to_string();
  if (!is_atomic(q)) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.to_string(); }

}  // namespace rsthl
