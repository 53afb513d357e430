#ifndef RSTHL_LIE_CURVATURE_HPP
#define RSTHL_LIE_CURVATURE_HPP

#include "rsthl/lie/connection.hpp"

namespace rsthl {

/// (1,3) curvature table: component l of R(e_i, e_j) e_k is stored at (i, j, k, l).
template <typename S>
using CurvatureTensor = DenseTensor<S, 4>;

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on the frame.
template <typename S>
CurvatureTensor<S> curvature(const Connection<S>& conn, const LieAlgebra<S>& alg) {
  const Eigen::Index n = alg.dimension();
  if (conn.dimension() != n) throw Error(ErrorCode::DimensionMismatch, "connection and algebra frames differ");
  const auto& g = conn.coefficients;
  const auto& c = alg.constants;
  CurvatureTensor<S> out(n);
  out.for_each_index([&](const auto& idx) {
    const auto i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    S acc(0);
    for (Eigen::Index m = 0; m < n; ++m) {
      if (!is_zero(g(j, k, m)) && !is_zero(g(i, m, l))) acc += g(j, k, m) * g(i, m, l);
      if (!is_zero(g(i, k, m)) && !is_zero(g(j, m, l))) acc -= g(i, k, m) * g(j, m, l);
      if (!is_zero(c(i, j, m)) && !is_zero(g(m, k, l))) acc -= c(i, j, m) * g(m, k, l);
    }
    out.at(idx) = acc;
  });
  return out;
}

/// R(X,Y)Z as a component vector.
template <typename S>
Vector<S> apply(const CurvatureTensor<S>& r, const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) {
  const Eigen::Index n = r.dimension();
  Vector<S> out = Vector<S>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_zero(y(j))) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (is_zero(z(k))) continue;
        const S w = x(i) * y(j) * z(k);
        for (Eigen::Index l = 0; l < n; ++l)
          if (!is_zero(r(i, j, k, l))) out(l) += w * r(i, j, k, l);
      }
    }
  }
  return out;
}

/// Type (0,4) curvature R(X,Y,Z,W) = g(R(X,Y)Z, W).
template <typename S>
QuadrilinearForm<S> lower(const CurvatureTensor<S>& r, const BilinearForm<S>& gram) {
  const Eigen::Index n = r.dimension();
  QuadrilinearForm<S> out(n);
  out.for_each_index([&](const auto& idx) {
    S acc(0);
    for (Eigen::Index l = 0; l < n; ++l)
      if (!is_zero(r(idx[0], idx[1], idx[2], l)) && !is_zero(gram(l, idx[3])))
        acc += r(idx[0], idx[1], idx[2], l) * gram(l, idx[3]);
    out.at(idx) = acc;
  });
  return out;
}

/// Ric(Y,Z) = trace{X -> R(X,Y)Z}, the coefficient trace in the given frame.
template <typename S>
BilinearForm<S> ricci(const CurvatureTensor<S>& r) {
  const Eigen::Index n = r.dimension();
  BilinearForm<S> out = BilinearForm<S>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index i = 0; i < n; ++i) out(j, k) += r(i, j, k, i);
  return out;
}

/// R(X,Y)Z + R(Y,Z)X + R(Z,X)Y on all frame triples, as a (1,3) table.
template <typename S>
CurvatureTensor<S> bianchi_residual(const CurvatureTensor<S>& r) {
  const Eigen::Index n = r.dimension();
  CurvatureTensor<S> out(n);
  out.for_each_index([&](const auto& idx) {
    const auto i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    out.at(idx) = r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l);
  });
  return out;
}

/// Pair-symmetry residuals of a (0,4) curvature: the three tables
/// R(X,Y,Z,W) + R(Y,X,Z,W), R(X,Y,Z,W) + R(X,Y,W,Z), R(X,Y,Z,W) - R(Z,W,X,Y).
template <typename S>
std::array<QuadrilinearForm<S>, 3> pair_symmetry_residuals(const QuadrilinearForm<S>& r) {
  const Eigen::Index n = r.dimension();
  std::array<QuadrilinearForm<S>, 3> out{QuadrilinearForm<S>(n), QuadrilinearForm<S>(n), QuadrilinearForm<S>(n)};
  r.for_each_index([&](const auto& idx) {
    const auto i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    out[0].at(idx) = r(i, j, k, l) + r(j, i, k, l);
    out[1].at(idx) = r(i, j, k, l) + r(i, j, l, k);
    out[2].at(idx) = r(i, j, k, l) - r(k, l, i, j);
  });
  return out;
}

}  // namespace rsthl

#endif  // RSTHL_LIE_CURVATURE_HPP
