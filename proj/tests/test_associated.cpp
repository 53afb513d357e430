#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rsthl/error.hpp"

using namespace rsthl;
using fixtures::Pipeline;

namespace {

const Scalar mu = Scalar::mu();

void check_all_pass(const std::vector<CheckEntry>& entries) {
  for (const auto& e : entries) {
    CAPTURE(e.name);
    CAPTURE(e.detail);
    CHECK_FALSE(e.failed());
  }
}

}  // namespace

TEST_CASE("example normal frame") {
  const Pipeline p(builtin_example47());
  const AssociatedFrame af = p.associated();
  const BilinearForm<Scalar> gt = associated_metric(p.s());
  CHECK(evaluate(gt, af.N1, af.N1) == Scalar(1));
  CHECK(evaluate(gt, af.N2, af.N2) == Scalar(-1));
  CHECK(evaluate(gt, af.N1, af.N2) == Scalar(0));
  CHECK(af.N1 == Vector<Scalar>(p.s().xi - p.frame.L()));
  CHECK(af.N2 == Vector<Scalar>(Scalar(2) * p.s().xi - Scalar(2) * mu * p.frame.N() - p.frame.L()));
  for (Eigen::Index i = 0; i < 3; ++i) {
    const Vector<Scalar> X = p.frame.tangent_basis().col(i);
    CHECK(evaluate(gt, X, af.N1) == Scalar(0));
    CHECK(evaluate(gt, X, af.N2) == Scalar(0));
  }
  CHECK(af.h1(0, 0) == Scalar(-2));
  CHECK(af.h1 == BilinearForm<Scalar>((Scalar(1) / mu) * p.obj.B));
  CHECK(af.g_tilde(2, 2) == mu * mu);
  check_all_pass(associated_checks(p.frame, p.s(), af, p.conn));
}

TEST_CASE("example associated curvature") {
  const Pipeline p(builtin_example47());
  const AssociatedFrame af = p.associated();
  const TildeCurvature tc = tilde_curvature(p.frame, af);
  CHECK(tc.ricci == BilinearForm<Scalar>(Scalar(-8) * af.g_tilde));
  const auto lambda = einstein_solve(tc.ricci, af.g_tilde);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == Scalar(-8));
  CHECK(ricci_action(tc.R, tc.ricci).is_zero());
  CHECK(tilde_semisymmetry_closed_form(p.frame, p.s(), p.pair, p.mu, *p.umb.gamma).is_zero());
  check_all_pass(tilde_curvature_ricci(p.frame, p.s(), p.obj, p.umb, af, tc, p.R, p.pair, p.mu));
}

TEST_CASE("eta_bar term of the associated Ricci closed form") {
  const Pipeline p(builtin_example47());
  const TildeCurvature tc = tilde_curvature(p.frame, p.associated());
  const Scalar gamma = *p.umb.gamma;
  CHECK(tilde_ricci_closed_form(p.frame, p.s(), p.pair, p.mu, gamma, true) == tc.ricci);
  const BilinearForm<Scalar> without_nu = tilde_ricci_closed_form(p.frame, p.s(), p.pair, p.mu, gamma, false);
  CHECK(without_nu != tc.ricci);
  CHECK(tc.ricci(2, 2) - without_nu(2, 2) == Scalar(-6) * mu * mu);
}

TEST_CASE("equivalent assertions on the example") {
  const Pipeline p(builtin_example47());
  const AssociatedFrame af = p.associated();
  const TildeCurvature tc = tilde_curvature(p.frame, af);
  const auto entries = equivalence_entries(p.frame, p.s(), p.umb, p.R, af, tc, p.pair, p.mu);
  check_all_pass(entries);
  CHECK(entries.back().name == "equivalence.equivalent");
  CHECK(entries.back().passed());
  CHECK(entries.back().detail == "(i) true (ii) true (iii) true (iv) true (v) true");
}

TEST_CASE("Einstein solve") {
  BilinearForm<Scalar> g = BilinearForm<Scalar>::Identity(2, 2);
  g(1, 1) = Scalar(-1);
  CHECK(einstein_solve(BilinearForm<Scalar>(mu * g), g) == mu);
  BilinearForm<Scalar> ric = BilinearForm<Scalar>::Identity(2, 2);
  CHECK_FALSE(einstein_solve(ric, g).has_value());
  CHECK(einstein_solve(BilinearForm<Scalar>::Zero(2, 2), g) == Scalar(0));
}

TEST_CASE("totally geodesic construction: both submanifolds agree") {
  const Pipeline p(fixtures::flat_example());
  const AssociatedFrame af = p.associated();
  CHECK(all_zero(af.h1));
  CHECK(all_zero(af.h2));
  const TildeCurvature tc = tilde_curvature(p.frame, af);
  CHECK(tc.R == p.R);
  CHECK(tc.ricci == ricci(p.R));
  check_all_pass(associated_checks(p.frame, p.s(), af, p.conn));
  check_all_pass(tilde_curvature_ricci(p.frame, p.s(), p.obj, p.umb, af, tc, p.R, p.pair, p.mu));
}

TEST_CASE("associated frame is independent of the ambient frame") {
  std::mt19937 rng(11);
  const Pipeline base(builtin_example47());
  const AssociatedFrame ref = base.associated();
  for (int trial = 0; trial < 4; ++trial) {
    CAPTURE(trial);
    const Pipeline p(fixtures::change_basis(builtin_example47(), fixtures::random_change(rng, 5)), base.pair);
    const AssociatedFrame af = p.associated();
    CHECK(af.g_tilde == ref.g_tilde);
    CHECK(af.h1 == ref.h1);
    CHECK(af.h2 == ref.h2);
    CHECK(af.conn_tilde == ref.conn_tilde);
  }
}
