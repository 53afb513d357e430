#include "rsthl/scalar/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rsthl {

Polynomial::Polynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return {};
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial remainder = dividend;
  if (remainder.degree() < divisor.degree()) return {Polynomial{}, remainder};

  std::vector<Rational> quotient(static_cast<std::size_t>(remainder.degree() - divisor.degree() + 1), Rational(0));
  const Rational& lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(remainder.degree() - divisor.degree());
    Rational factor = remainder.leading() / lead;
    quotient[shift] = factor;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k) remainder.coeffs_[k + shift] -= factor * divisor.coeffs_[k];
    remainder.trim();
  }
  return {Polynomial(std::move(quotient)), remainder};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (sgn(c) == 0) continue;
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (idx == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (!unit) out += magnitude.get_str() + "*";
    out += var;
    if (idx > 1) out += "^" + std::to_string(idx);
  }
  return out;
}

}  // namespace rsthl
