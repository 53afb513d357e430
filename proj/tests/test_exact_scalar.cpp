#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsthl/error.hpp"
#include "rsthl/scalar/parse.hpp"
#include "rsthl/scalar/rational_function.hpp"

using rsthl::ErrorCode;
using rsthl::Polynomial;
using rsthl::Rational;
using rsthl::RationalFunction;
using rsthl::parse_scalar;

namespace {

const RationalFunction mu = RationalFunction::mu();

class RandomScalars {
public:
  explicit RandomScalars(unsigned seed) : rng_(seed) {}

  Polynomial polynomial(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> c;
    for (int k = 0, d = deg(rng_); k <= d; ++k) c.emplace_back(num(rng_), den(rng_));
    return Polynomial(std::move(c));
  }

  RationalFunction value() {
    Polynomial q = polynomial(2);
    while (q.is_zero()) q = polynomial(2);
    return RationalFunction(polynomial(2), q);
  }

  RationalFunction nonzero() {
    RationalFunction v = value();
    while (v.is_zero()) v = value();
    return v;
  }

private:
  std::mt19937 rng_;
};

}  // namespace

TEST_CASE("parse_scalar literal examples") {
  CHECK(parse_scalar("2*mu") == RationalFunction(Polynomial{0, 2}));
  const RationalFunction r = parse_scalar("-1/(2*mu^2)");
  CHECK(r.numerator() == Polynomial(Rational(-1, 2)));
  CHECK(r.denominator() == Polynomial{0, 0, 1});
  CHECK(parse_scalar("4*mu^2*(1/mu)^2") == RationalFunction(4));
  CHECK(parse_scalar(" mu ^ -1 ") == mu.inverse());
  CHECK(parse_scalar("-mu^2") == -(mu * mu));
  CHECK(parse_scalar("2^3") == RationalFunction(8));
}

TEST_CASE("parse_scalar errors") {
  SUBCASE("syntax error reports position") {
    try {
      parse_scalar("2*(mu+1");
      FAIL("expected ParseError");
    } catch (const rsthl::ParseError& e) {
      CHECK(e.position() == 7);
    }
  }
  SUBCASE("unknown symbol") {
    try {
      parse_scalar("2*nu");
      FAIL("expected ParseError");
    } catch (const rsthl::ParseError& e) {
      CHECK(e.position() == 2);
    }
  }
  SUBCASE("division by the zero polynomial") {
    try {
      parse_scalar("1/(mu-mu)");
      FAIL("expected DivisionByZero");
    } catch (const rsthl::Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
  }
  CHECK_THROWS_AS(parse_scalar(""), rsthl::ParseError);
  CHECK_THROWS_AS(parse_scalar("mu mu"), rsthl::ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), rsthl::ParseError);
}

TEST_CASE("field operations and evaluation") {
  CHECK(mu.inverse() * (2 * mu) == RationalFunction(2));
  CHECK(RationalFunction(Polynomial(1), Polynomial{0, 2}).eval_at(Rational(1, 2)) == 1);
  const RationalFunction gamma = mu.inverse();
  const RationalFunction nu = 4 * mu * mu * gamma * gamma;
  CHECK(nu == RationalFunction(4));
  CHECK((nu - 4).is_zero());
  CHECK_THROWS_AS(mu / RationalFunction(0), rsthl::Error);
  try {
    mu.inverse().eval_at(0);
    FAIL("expected pole");
  } catch (const rsthl::Error& e) {
    CHECK(e.code() == ErrorCode::EvaluationAtPole);
  }
}

TEST_CASE("canonical representation") {
  const RationalFunction a = (mu * mu - 1) / (mu - 1);
  CHECK(a == mu + 1);
  CHECK(a.denominator() == Polynomial(1));
  const RationalFunction b = RationalFunction(Polynomial{2}, Polynomial{0, -4});
  CHECK(b.denominator().leading() == 1);
  CHECK(b.to_string() == "-1/(2*mu)");
  CHECK(RationalFunction().denominator() == Polynomial(1));
  CHECK((mu - mu) == RationalFunction());
  CHECK(((mu + 1) / (3 * mu - 3)).to_string() == "(mu + 1)/(3*mu - 3)");
  CHECK(RationalFunction::rational(3, 6).to_string() == "1/2");
  CHECK((mu / 2).to_string() == "mu/2");
  CHECK(mu.is_constant() == false);
  CHECK(RationalFunction::rational(-3, 4).constant_value() == Rational(-3, 4));
}

TEST_CASE("field axioms on random small-degree inputs") {
  RandomScalars gen(20261016u);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalFunction a = gen.value(), b = gen.value(), c = gen.value(), d = gen.nonzero();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalFunction());
    CHECK(d * d.inverse() == RationalFunction(1));
    CHECK((a / d) * d == a);
  }
}

TEST_CASE("parse of print is the identity on canonical forms") {
  RandomScalars gen(7u);
  for (int trial = 0; trial < 80; ++trial) {
    const RationalFunction a = gen.value();
    CHECK(parse_scalar(a.to_string()) == a);
  }
}

TEST_CASE("eval_at commutes with field operations") {
  RandomScalars gen(99u);
  const Rational points[] = {Rational(3, 7), Rational(-5, 2), Rational(11)};
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction a = gen.value(), b = gen.nonzero();
    for (const auto& x : points) {
      if (a.has_pole_at(x) || b.has_pole_at(x) || sgn(b.eval_at(x)) == 0) continue;
      const Rational ax = a.eval_at(x), bx = b.eval_at(x);
      CHECK((a + b).eval_at(x) == ax + bx);
      CHECK((a - b).eval_at(x) == ax - bx);
      CHECK((a * b).eval_at(x) == ax * bx);
      CHECK((a / b).eval_at(x) == ax / bx);
    }
  }
}
