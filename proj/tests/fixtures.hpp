#ifndef RSTHL_TESTS_FIXTURES_HPP
#define RSTHL_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>

#include "rsthl/associated/associated.hpp"
#include "rsthl/verify/model.hpp"

namespace fixtures {

using namespace rsthl;

/// Everything the lightlike and associated layers derive from one model.
struct Pipeline {
  ModelFile model;
  Connection<Scalar> conn;
  CurvatureTensor<Scalar> R_bar;
  CurvaturePair pair;
  SubmanifoldFrame frame;
  Scalar mu;
  InducedObjects obj;
  UmbilicityReport umb;
  CurvatureTensor<Scalar> R;

  /// `known_pair` skips the section search, for frames without a totally
  /// real pair of frame vectors.
  explicit Pipeline(ModelFile m, std::optional<CurvaturePair> known_pair = std::nullopt)
      : model(std::move(m)),
        conn(levi_civita(model.algebra, model.structure.metric)),
        R_bar(curvature(conn, model.algebra)),
        pair(known_pair ? *known_pair : fit_curvature_pair(model.structure, lower(R_bar, model.structure.metric))),
        frame(SubmanifoldFrame::build(model.algebra, model.structure.metric, model.submanifold)),
        mu(certify_ascreen_rsthl(frame, model.structure).mu),
        obj(gauss_weingarten(frame, conn)),
        umb(umbilicity(frame, obj)),
        R(induced_curvature(frame, obj)) {}

  const ACBMStructure& s() const { return model.structure; }
  AssociatedFrame associated() const { return build_associated(frame, s(), obj, conn, mu); }
};

/// The example data on the abelian algebra: flat, F0, and every subspace is a
/// subalgebra, so the submanifold is totally geodesic.
inline ModelFile flat_example() {
  ModelFile m = builtin_example47();
  m.name = "flat";
  m.algebra = LieAlgebra<Scalar>::abelian(m.frame());
  return m;
}

/// The same model written in the frame e'_i = sum_a P(a, i) e_a.
inline ModelFile change_basis(const ModelFile& m, const Matrix<Scalar>& P) {
  const Matrix<Scalar> Pinv = inverse(P);
  const Eigen::Index n = P.rows();
  ModelFile out = m;
  out.name = m.name + "-rebased";
  DenseTensor<Scalar, 3> c(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector<Scalar> b = Pinv * m.algebra.bracket(P.col(i), P.col(j));
      for (Eigen::Index k = 0; k < n; ++k) c(i, j, k) = b(k);
    }
  out.algebra = LieAlgebra<Scalar>(Frame::numbered(static_cast<std::size_t>(n), "f"), std::move(c));
  out.structure.metric = P.transpose() * m.structure.metric * P;
  out.structure.phi = Pinv * m.structure.phi * P;
  out.structure.xi = Pinv * m.structure.xi;
  out.structure.eta = m.structure.eta * P;
  for (auto& v : out.submanifold.screen) v = Pinv * v;
  out.submanifold.xi = Pinv * m.submanifold.xi;
  out.submanifold.L = Pinv * m.submanifold.L;
  if (out.submanifold.N) *out.submanifold.N = Pinv * *out.submanifold.N;
  return out;
}

/// Unit upper triangular times a signed permutation, entries in {-2..2}.
inline Matrix<Scalar> random_change(std::mt19937& rng, Eigen::Index n) {
  std::uniform_int_distribution<long> entry(-2, 2);
  Matrix<Scalar> U = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) U(i, j) = Scalar(entry(rng));
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<Scalar> S = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) S(perm[static_cast<std::size_t>(i)], i) = Scalar(rng() % 2 ? 1 : -1);
  return S * U;
}

}  // namespace fixtures

#endif  // RSTHL_TESTS_FIXTURES_HPP
