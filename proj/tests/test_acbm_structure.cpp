#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsthl/acbm/structure.hpp"
#include "rsthl/error.hpp"
#include "rsthl/lie/curvature.hpp"
#include "rsthl/verify/model.hpp"

using namespace rsthl;

namespace {

struct Ambient {
  ModelFile model = builtin_example47();
  Connection<Scalar> conn = levi_civita(model.algebra, model.structure.metric);
  QuadrilinearForm<Scalar> R4 = lower(curvature(conn, model.algebra), model.structure.metric);
};

}  // namespace

TEST_CASE("example structure satisfies the axioms") {
  const Ambient a;
  const CheckEntry e = validate_acbm(a.model.structure);
  CHECK(e.passed());
  const Signature sig = signature(a.model.structure.metric);
  CHECK(sig.positive == 3);
  CHECK(sig.negative == 2);
  CHECK(sig.zero == 0);

  const BilinearForm<Scalar> gt = associated_metric(a.model.structure);
  CHECK(is_symmetric(gt));
  CHECK(signature(gt) == sig);
}

TEST_CASE("broken structure axioms are named") {
  Ambient a;
  ACBMStructure s = a.model.structure;
  s.phi(0, 4) = Scalar(1);  // phi E = X1
  const CheckEntry e = validate_acbm(s);
  CHECK(e.failed());
  CHECK_FALSE(e.detail.empty());

  s = a.model.structure;
  s.eta(4) = Scalar(2);
  CHECK(validate_acbm(s).failed());

  s = a.model.structure;
  s.metric = example47_metric(true);
  CHECK(validate_acbm(s).failed());
}

TEST_CASE("F0 class") {
  const Ambient a;
  CHECK(is_F0(fundamental_tensor(a.model.structure, a.conn)));
  CHECK(levi_civita(a.model.algebra, associated_metric(a.model.structure)) == a.conn);

  // Same structure on a Heisenberg-type algebra: phi is no longer parallel.
  LieAlgebra<Scalar> other = LieAlgebra<Scalar>::abelian(a.model.frame());
  other.set_bracket(0, 1, basis_vector<Scalar>(5, 4));
  const TrilinearForm<Scalar> F = fundamental_tensor(a.model.structure, levi_civita(other, a.model.structure.metric));
  CHECK_FALSE(is_F0(F));
}

TEST_CASE("constant totally real sectional curvatures") {
  const Ambient a;
  const TotallyRealSection sec = find_totally_real_section(a.model.structure);
  CHECK(sec.first < sec.second);
  const CurvaturePair pair = fit_curvature_pair(a.model.structure, a.R4);
  CHECK(pair.nu == Scalar(4));
  CHECK(pair.nu_tilde == Scalar(0));
  CHECK(constant_curvature_residual(a.model.structure, a.R4, pair).is_zero());

  const PiTensors pi = pi_tensors(a.model.structure);
  const LinearOperator<Scalar>& phi = a.model.structure.phi;
  QuadrilinearForm<Scalar> pi1_phi(5);
  pi1_phi.for_each_index([&](const auto& idx) {
    Scalar acc(0);
    for (Eigen::Index p = 0; p < 5; ++p)
      for (Eigen::Index q = 0; q < 5; ++q)
        for (Eigen::Index r = 0; r < 5; ++r)
          for (Eigen::Index t = 0; t < 5; ++t)
            if (!is_zero(phi(p, idx[0])) && !is_zero(phi(q, idx[1])) && !is_zero(phi(r, idx[2])) &&
                !is_zero(phi(t, idx[3])))
              acc += phi(p, idx[0]) * phi(q, idx[1]) * phi(r, idx[2]) * phi(t, idx[3]) * pi.pi1(p, q, r, t);
    pi1_phi.at(idx) = acc;
  });
  CHECK(a.R4 == Scalar(4) * (pi1_phi - pi.pi2));

  const CurvaturePair wrong{Scalar(4), Scalar(1)};
  CHECK_FALSE(constant_curvature_residual(a.model.structure, a.R4, wrong).is_zero());
}

TEST_CASE("no totally real section on a three-dimensional structure with a null plane") {
  ACBMStructure s;
  s.metric = BilinearForm<Scalar>::Zero(3, 3);
  s.metric(0, 0) = Scalar(1);
  s.metric(1, 1) = Scalar(-1);
  s.metric(2, 2) = Scalar(1);
  s.phi = LinearOperator<Scalar>::Zero(3, 3);
  s.phi(1, 0) = Scalar(1);
  s.phi(0, 1) = Scalar(-1);
  s.xi = basis_vector<Scalar>(3, 2);
  s.eta = basis_vector<Scalar>(3, 2).transpose();
  CHECK(validate_acbm(s).passed());
  CHECK_THROWS_AS(find_totally_real_section(s), Error);
}
