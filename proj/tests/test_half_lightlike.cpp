#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rsthl/error.hpp"

using namespace rsthl;
using fixtures::Pipeline;

namespace {

const Scalar mu = Scalar::mu();

Vector<Scalar> tangent(Scalar e1, Scalar e2, Scalar xi) {
  Vector<Scalar> v(3);
  v << e1, e2, xi;
  return v;
}

ErrorCode build_error(const ModelFile& m) {
  try {
    const SubmanifoldFrame f = SubmanifoldFrame::build(m.algebra, m.structure.metric, m.submanifold);
    certify_ascreen_rsthl(f, m.structure);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("example frame") {
  const Pipeline p(builtin_example47());
  CHECK(validate_frame(p.model.algebra, p.s().metric, p.model.submanifold).passed());
  CHECK(p.frame.epsilon() == 1);
  CHECK(evaluate(p.s().metric, p.frame.xi(), p.frame.xi()) == Scalar(0));
  const Scalar h = Scalar(1) / (Scalar(2) * mu);
  Vector<Scalar> N = Vector<Scalar>::Zero(5);
  N(2) = h;
  N(4) = h;
  CHECK(p.frame.N() == N);
  CHECK(p.frame.tangent_frame().labels() == std::vector<std::string>{"E1", "E2", "xi"});
}

TEST_CASE("example certificate") {
  const Pipeline p(builtin_example47());
  CHECK(p.mu == mu);
  const AscreenCertificate cert = certify_ascreen_rsthl(p.frame, p.s());
  for (const auto& e : cert.entries) {
    CAPTURE(e.name);
    CHECK(e.passed());
  }
  const Vector<Scalar> residual = p.s().xi - (Scalar(1) / (Scalar(2) * mu)) * p.frame.xi() - mu * p.frame.N();
  CHECK(all_zero(residual));
}

TEST_CASE("example induced connection") {
  const Pipeline p(builtin_example47());
  const Connection<Scalar>& c = p.obj.conn;
  const Scalar z(0);
  CHECK(c.apply(0, 2) == tangent(Scalar(2) * mu, z, z));
  CHECK(c.apply(1, 2) == tangent(z, Scalar(2) * mu, z));
  CHECK(c.apply(0, 0) == tangent(z, z, Scalar(1) / mu));
  CHECK(c.apply(1, 1) == tangent(z, z, Scalar(-1) / mu));
  CHECK(all_zero(c.apply(0, 1)));
  CHECK(all_zero(c.apply(1, 0)));
  for (Eigen::Index j = 0; j < 3; ++j) CHECK(all_zero(c.apply(2, j)));

  CHECK(all_zero(p.obj.tau));
  CHECK(all_zero(p.obj.rho));
  CHECK(all_zero(p.obj.phi_form));
  CHECK(p.obj.A_N == LinearOperator<Scalar>((Scalar(1) / mu) * p.frame.projection()));
  CHECK(p.obj.B == BilinearForm<Scalar>(Scalar(-2) * mu * p.frame.induced_metric()));
  for (const auto& e : induced_structure_checks(p.frame, p.obj)) {
    CAPTURE(e.name);
    CHECK(e.passed());
  }
  for (const auto& e : ascreen_f0_checks(p.frame, p.s(), p.obj, p.mu)) {
    CAPTURE(e.name);
    CHECK(e.passed());
  }
}

TEST_CASE("example umbilicity") {
  const Pipeline p(builtin_example47());
  REQUIRE(p.umb.gamma.has_value());
  CHECK(*p.umb.gamma == Scalar(1) / mu);
  CHECK(p.umb.screen_proper_umbilical);
  CHECK_FALSE(p.umb.screen_totally_geodesic);
  CHECK_FALSE(p.umb.totally_umbilical());
  for (const auto& e : umbilicity_checks(p.frame, p.obj, p.umb, p.mu)) CHECK(e.passed());
}

TEST_CASE("example induced curvature and Ricci") {
  const Pipeline p(builtin_example47());
  // R(xi, Y) Z = 4mu^2 Y^1 Z^3 E1 + 4mu^2 Y^2 Z^3 E2 + 2(Y^1 Z^1 - Y^2 Z^2) xi
  const Scalar z(0);
  const Vector<Scalar> xi = tangent(z, z, Scalar(1));
  const Vector<Scalar> E1 = tangent(Scalar(1), z, z);
  const Vector<Scalar> E2 = tangent(z, Scalar(1), z);
  const Scalar four_mu2 = Scalar(4) * mu * mu;
  CHECK(apply(p.R, xi, E1, xi) == tangent(four_mu2, z, z));
  CHECK(apply(p.R, xi, E2, xi) == tangent(z, four_mu2, z));
  CHECK(apply(p.R, xi, E1, E1) == tangent(z, z, Scalar(2)));
  CHECK(apply(p.R, xi, E2, E2) == tangent(z, z, Scalar(-2)));
  CHECK(all_zero(apply(p.R, xi, E1, E2)));
  CHECK(all_zero(apply(p.R, xi, xi, E1)));

  const BilinearForm<Scalar> ric = ricci(p.R);
  const Covector<Scalar> eb = structure_form_on_tangent(p.frame, p.s());
  const BilinearForm<Scalar> g = p.frame.induced_metric();
  CHECK(ric == BilinearForm<Scalar>(Scalar(4) * g - Scalar(8) * eb.transpose() * eb));

  const EtaEinstein ee = eta_einstein_solve(ric, g, eb);
  CHECK(ee.k == Scalar(4));
  CHECK(ee.c == Scalar(-8));
  CHECK(ee.constant_coefficients);
  CHECK(ricci_action(p.R, ric).is_zero());
  CHECK(semisymmetry_closed_form(p.frame, p.s(), p.pair, p.mu, *p.umb.gamma).is_zero());
}

TEST_CASE("example curvature residuals") {
  const Pipeline p(builtin_example47());
  CHECK(gauss_relation_entry(p.frame, p.obj, p.R_bar, p.R).passed());
  for (const auto& e : curvature_residuals(p.frame, p.s(), p.obj, p.umb, p.R_bar, p.R, p.pair, p.mu)) {
    CAPTURE(e.name);
    CHECK(e.passed());
  }
}

TEST_CASE("eta-Einstein solve") {
  const Pipeline p(builtin_example47());
  const BilinearForm<Scalar> g = p.frame.induced_metric();
  const Covector<Scalar> eb = structure_form_on_tangent(p.frame, p.s());
  const EtaEinstein zero = eta_einstein_solve(BilinearForm<Scalar>::Zero(3, 3), g, eb);
  CHECK(zero.k == Scalar(0));
  CHECK(zero.c == Scalar(0));

  const EtaEinstein varying = eta_einstein_solve(BilinearForm<Scalar>(mu * g), g, eb);
  CHECK(varying.k == mu);
  CHECK_FALSE(varying.constant_coefficients);

  BilinearForm<Scalar> other = BilinearForm<Scalar>::Zero(3, 3);
  other(0, 1) = other(1, 0) = Scalar(1);
  try {
    eta_einstein_solve(other, g, eb);
    FAIL("expected NotEtaEinstein");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEtaEinstein);
  }
}

TEST_CASE("radical generator in the screen span") {
  // xi = X2 + X4 is null but lies in span{E1, E2}: the frame is rejected
  // before the ascreen condition can be asked.
  ModelFile m = builtin_example47();
  m.submanifold.xi = m.submanifold.screen[0] + m.submanifold.screen[1];
  CHECK(build_error(m) == ErrorCode::InvalidFrame);
}

TEST_CASE("structure vector with a screen component") {
  // Flat ambient, xi = X4 + E, L = -X2, screen {X1 + xi, X3}: then
  // N = (E - X4)/2 - X1 - xi/2 and xi_bar = E = N + (X1 + xi).
  ModelFile m = fixtures::flat_example();
  const Vector<Scalar> xi = basis_vector<Scalar>(5, 3) + basis_vector<Scalar>(5, 4);
  m.submanifold.xi = xi;
  m.submanifold.L = -basis_vector<Scalar>(5, 1);
  m.submanifold.screen = {basis_vector<Scalar>(5, 0) + xi, basis_vector<Scalar>(5, 2)};
  CHECK(build_error(m) == ErrorCode::NotAscreen);

  // With the screen {X1, X3} the same radical is ascreen, with mu = 1.
  m.submanifold.screen = {basis_vector<Scalar>(5, 0), basis_vector<Scalar>(5, 2)};
  const SubmanifoldFrame f = SubmanifoldFrame::build(m.algebra, m.structure.metric, m.submanifold);
  CHECK(certify_ascreen_rsthl(f, m.structure).mu == Scalar(1));
}

TEST_CASE("frame errors") {
  ModelFile m = builtin_example47();
  m.submanifold.L = m.submanifold.xi;
  CHECK(build_error(m) != ErrorCode::IoError);

  m = builtin_example47();
  m.submanifold.screen[1] = basis_vector<Scalar>(5, 2);  // X3 is not orthogonal to xi
  CHECK(build_error(m) == ErrorCode::RadicalRankNotOne);

  m = builtin_example47();
  m.submanifold.L = basis_vector<Scalar>(5, 2) + basis_vector<Scalar>(5, 4);  // null and tangent to nothing
  CHECK(build_error(m) != ErrorCode::IoError);

  m = fixtures::flat_example();
  m.submanifold.xi = basis_vector<Scalar>(5, 3) + basis_vector<Scalar>(5, 4);
  m.submanifold.L = basis_vector<Scalar>(5, 0);  // phi xi = -X2 is not along L
  m.submanifold.screen = {basis_vector<Scalar>(5, 1), basis_vector<Scalar>(5, 2)};
  CHECK(build_error(m) != ErrorCode::IoError);
}

TEST_CASE("totally geodesic construction on a flat ambient") {
  const Pipeline p(fixtures::flat_example());
  CHECK(p.pair.nu == Scalar(0));
  CHECK(p.pair.nu_tilde == Scalar(0));
  CHECK(all_zero(p.obj.B));
  CHECK(all_zero(p.obj.C));
  CHECK(all_zero(p.obj.D));
  CHECK(p.umb.totally_geodesic);
  CHECK(p.umb.screen_totally_geodesic);
  REQUIRE(p.umb.beta.has_value());
  CHECK(*p.umb.beta == Scalar(0));
  CHECK(*p.umb.gamma == Scalar(0));
  CHECK(p.R.is_zero());
  CHECK(all_zero(ricci(p.R)));
  for (const auto& e : curvature_residuals(p.frame, p.s(), p.obj, p.umb, p.R_bar, p.R, p.pair, p.mu)) {
    CAPTURE(e.name);
    CHECK_FALSE(e.failed());
  }
}

TEST_CASE("Gauss relation survives random changes of frame") {
  std::mt19937 rng(7);
  const Pipeline base(builtin_example47());
  for (int trial = 0; trial < 6; ++trial) {
    CAPTURE(trial);
    const Pipeline p(fixtures::change_basis(builtin_example47(), fixtures::random_change(rng, 5)), base.pair);
    CHECK(constant_curvature_residual(p.s(), lower(p.R_bar, p.s().metric), p.pair).is_zero());
    CHECK(p.mu == mu);
    CHECK(gauss_relation_entry(p.frame, p.obj, p.R_bar, p.R).passed());
    // Tangent tables do not depend on the ambient frame.
    CHECK(p.obj.B == base.obj.B);
    CHECK(p.R == base.R);
  }
}
