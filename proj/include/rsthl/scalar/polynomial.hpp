#ifndef RSTHL_SCALAR_POLYNOMIAL_HPP
#define RSTHL_SCALAR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rsthl {

using Rational = mpq_class;

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first and the leading coefficient is never zero (the zero polynomial has
/// no coefficients at all).
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  /// x^k
  static Polynomial monomial(std::size_t degree, const Rational& coefficient = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);

  /// Monic greatest common divisor (gcd(0, 0) = 0).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;

  /// Human-readable form in the variable `var`, e.g. "2*mu^2 - 1/3".
  std::string to_string(const std::string& var = "mu") const;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace rsthl

#endif  // RSTHL_SCALAR_POLYNOMIAL_HPP
