#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsthl/error.hpp"
#include "rsthl/lie/curvature.hpp"
#include "rsthl/verify/model.hpp"
#include "rsthl/verify/suite.hpp"

using namespace rsthl;

namespace {

const Scalar mu = Scalar::mu();

// Almost abelian algebra R x_A R^{n-1}: [e1, e_j] = A e_j, other brackets zero.
LieAlgebra<Scalar> almost_abelian(std::mt19937& rng, Eigen::Index n) {
  std::uniform_int_distribution<long> entry(-2, 2);
  LieAlgebra<Scalar> alg = LieAlgebra<Scalar>::abelian(Frame::numbered(static_cast<std::size_t>(n)));
  for (Eigen::Index j = 1; j < n; ++j) {
    Vector<Scalar> v = Vector<Scalar>::Zero(n);
    for (Eigen::Index k = 1; k < n; ++k) v(k) = Scalar(entry(rng));
    alg.set_bracket(0, j, v);
  }
  return alg;
}

// Random symmetric table with entries in Z + Z mu, retried until nondegenerate.
BilinearForm<Scalar> random_metric(std::mt19937& rng, Eigen::Index n) {
  std::uniform_int_distribution<long> entry(-2, 2);
  for (;;) {
    BilinearForm<Scalar> g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) {
        g(i, j) = Scalar(entry(rng)) + (i == j ? Scalar(entry(rng)) * mu : Scalar(0));
        g(j, i) = g(i, j);
      }
    if (!is_zero(determinant(g))) return g;
  }
}

}  // namespace

TEST_CASE("Jacobi identity") {
  LieAlgebra<Scalar> heis = LieAlgebra<Scalar>::abelian(Frame::numbered(3));
  heis.set_bracket(0, 1, basis_vector<Scalar>(3, 2));
  CHECK(validate_lie_algebra(heis).passed());

  LieAlgebra<Scalar> broken = LieAlgebra<Scalar>::abelian(Frame::numbered(3));
  broken.set_bracket(0, 1, basis_vector<Scalar>(3, 2));
  broken.set_bracket(1, 2, basis_vector<Scalar>(3, 0));
  broken.set_bracket(2, 0, basis_vector<Scalar>(3, 0));
  const CheckEntry e = validate_lie_algebra(broken);
  CHECK(e.failed());
  CHECK(e.detail.find("Jacobi") != std::string::npos);

  LieAlgebra<Scalar> skew = LieAlgebra<Scalar>::abelian(Frame::numbered(2));
  skew.constants(0, 1, 0) = Scalar(1);
  CHECK(validate_lie_algebra(skew).failed());
}

TEST_CASE("example connection table") {
  const ModelFile m = builtin_example47();
  const Connection<Scalar> lc = levi_civita(m.algebra, m.structure.metric);
  CHECK(lc == example47_reference_connection());
  CHECK(levi_civita(m.algebra, example47_metric(true)) != example47_reference_connection());
  CHECK(torsion(lc, m.algebra).is_zero());
  CHECK(metric_derivative(lc, m.structure.metric).is_zero());
}

TEST_CASE("example curvature symmetries") {
  const ModelFile m = builtin_example47();
  const CurvatureTensor<Scalar> R = curvature(levi_civita(m.algebra, m.structure.metric), m.algebra);
  CHECK(bianchi_residual(R).is_zero());
  for (const auto& res : pair_symmetry_residuals(lower(R, m.structure.metric))) CHECK(res.is_zero());
  const BilinearForm<Scalar> ric = ricci(R);
  CHECK(is_symmetric(ric));
}

TEST_CASE("degenerate metric is rejected") {
  const ModelFile m = builtin_example47();
  BilinearForm<Scalar> g = m.structure.metric;
  g(4, 4) = 0;
  try {
    levi_civita(m.algebra, g);
    FAIL("expected DegenerateMetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateMetric);
  }
}

TEST_CASE("random almost abelian models") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 12; ++trial) {
    const Eigen::Index n = 3 + trial % 2;
    const LieAlgebra<Scalar> alg = almost_abelian(rng, n);
    const BilinearForm<Scalar> g = random_metric(rng, n);
    CAPTURE(trial);
    REQUIRE(validate_lie_algebra(alg).passed());
    const Connection<Scalar> lc = levi_civita(alg, g);
    CHECK(torsion(lc, alg).is_zero());
    CHECK(metric_derivative(lc, g).is_zero());
    const CurvatureTensor<Scalar> R = curvature(lc, alg);
    CHECK(bianchi_residual(R).is_zero());
    for (const auto& res : pair_symmetry_residuals(lower(R, g))) CHECK(res.is_zero());
  }
}

TEST_CASE("direct sums keep the summands apart") {
  LieAlgebra<Scalar> heis = LieAlgebra<Scalar>::abelian(Frame({"a", "b", "c"}));
  heis.set_bracket(0, 1, basis_vector<Scalar>(3, 2));
  const LieAlgebra<Scalar> sum = direct_sum(heis, LieAlgebra<Scalar>::abelian(Frame({"t"})));
  CHECK(sum.dimension() == 4);
  CHECK(sum.bracket(0, 1) == basis_vector<Scalar>(4, 2));
  CHECK(all_zero(sum.bracket(0, 3)));
}
