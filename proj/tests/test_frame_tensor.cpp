#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsthl/error.hpp"
#include "rsthl/lightlike/submanifold.hpp"
#include "rsthl/tensor/linear_algebra.hpp"

using namespace rsthl;

namespace {

const Scalar mu = Scalar::mu();

Vector<Scalar> vec(std::initializer_list<Scalar> xs) {
  Vector<Scalar> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

BilinearForm<Scalar> example_metric() {
  BilinearForm<Scalar> g = BilinearForm<Scalar>::Zero(5, 5);
  g(0, 0) = 1;
  g(1, 1) = 1;
  g(2, 2) = -1;
  g(3, 3) = -1;
  g(4, 4) = 1;
  return g;
}

}  // namespace

TEST_CASE("frame labels") {
  const Frame f = Frame::numbered(3, "X");
  CHECK(f.dimension() == 3);
  CHECK(f.label(2) == "X3");
  CHECK(f.index_of("X2") == 1u);
  CHECK_FALSE(f.index_of("E").has_value());
}

TEST_CASE("gram inverse over Q(mu)") {
  BilinearForm<Scalar> g(2, 2);
  g << mu, Scalar(1), Scalar(1), Scalar(0);
  const BilinearForm<Scalar> inv = gram_inverse(g);
  CHECK(g * inv == BilinearForm<Scalar>::Identity(2, 2));
  CHECK(inv(1, 1) == -mu);
  CHECK(determinant(g) == Scalar(-1));
}

TEST_CASE("degenerate and asymmetric Gram tables") {
  BilinearForm<Scalar> g(2, 2);
  g << mu, mu * mu, Scalar(1), mu;
  CHECK_THROWS_AS(gram_inverse(g), Error);

  g << mu, mu * mu, mu * mu, mu * mu * mu;
  try {
    gram_inverse(g);
    FAIL("expected DegenerateMetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateMetric);
  }
}

TEST_CASE("trace of a projection scaled by 1/mu") {
  LinearOperator<Scalar> p = LinearOperator<Scalar>::Identity(3, 3);
  p(2, 2) = 0;
  CHECK(trace(LinearOperator<Scalar>((Scalar(1) / mu) * p)) == Scalar(2) / mu);
}

TEST_CASE("general solve reports the kernel") {
  Matrix<Scalar> a(2, 3);
  a << Scalar(1), mu, Scalar(0), Scalar(0), Scalar(0), Scalar(1);
  const auto sol = solve_general(a, vec({Scalar(1), mu}));
  CHECK(sol.nullspace.cols() == 1);
  CHECK(a * sol.particular == vec({Scalar(1), mu}));
  CHECK(all_zero(a * sol.nullspace));
  CHECK_THROWS_AS(linear_solve(a, vec({Scalar(1), mu})), Error);

  Matrix<Scalar> b(2, 1);
  b << Scalar(1), Scalar(2);
  try {
    solve_general(b, vec({Scalar(1), Scalar(1)}));
    FAIL("expected InconsistentSystem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentSystem);
  }
}

TEST_CASE("rank and determinant agree") {
  Matrix<Scalar> m(3, 3);
  m << Scalar(1), mu, mu * mu, Scalar(1), Scalar(2) * mu, Scalar(4) * mu * mu, Scalar(2), Scalar(3) * mu,
      Scalar(5) * mu * mu;
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == Scalar(0));
  m(2, 2) = mu;
  CHECK(rank(m) == 3);
  CHECK(determinant(inverse(m)) * determinant(m) == Scalar(1));
}

TEST_CASE("lightlike transversal of the example frame") {
  const Vector<Scalar> X2 = basis_vector<Scalar>(5, 1);
  const Vector<Scalar> X4 = basis_vector<Scalar>(5, 3);
  const Vector<Scalar> xi = vec({Scalar(0), Scalar(0), -mu, Scalar(0), mu});
  const Vector<Scalar> L = basis_vector<Scalar>(5, 0);
  const Vector<Scalar> N = solve_N(example_metric(), {X2, X4}, xi, L);
  const Scalar h = Scalar(1) / (Scalar(2) * mu);
  CHECK(N == vec({Scalar(0), Scalar(0), h, Scalar(0), h}));

  // xi is null and L is in the span that N must avoid; the constraints clash.
  CHECK_THROWS_AS(solve_N(example_metric(), {X2, X4}, xi, xi), Error);
}
