#ifndef RSTHL_LIE_CONNECTION_HPP
#define RSTHL_LIE_CONNECTION_HPP

#include "rsthl/lie/lie_algebra.hpp"
#include "rsthl/tensor/linear_algebra.hpp"

namespace rsthl {

/// Left-invariant linear connection: nabla_{e_i} e_j = sum_k coefficients(i, j, k) e_k.
/// Components of left-invariant fields are constant, so nabla_X Y is bilinear
/// in the component vectors.
template <typename S>
struct Connection {
  DenseTensor<S, 3> coefficients;

  Connection() = default;
  explicit Connection(DenseTensor<S, 3> c) : coefficients(std::move(c)) {}

  Eigen::Index dimension() const { return coefficients.dimension(); }

  Vector<S> apply(const Vector<S>& x, const Vector<S>& y) const {
    const Eigen::Index n = dimension();
    Vector<S> out = Vector<S>::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (is_zero(x(i))) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (is_zero(y(j))) continue;
        const S w = x(i) * y(j);
        for (Eigen::Index k = 0; k < n; ++k)
          if (!is_zero(coefficients(i, j, k))) out(k) += w * coefficients(i, j, k);
      }
    }
    return out;
  }

  Vector<S> apply(Eigen::Index i, Eigen::Index j) const {
    Vector<S> out(dimension());
    for (Eigen::Index k = 0; k < dimension(); ++k) out(k) = coefficients(i, j, k);
    return out;
  }

  /// Matrix of Y -> nabla_X Y.
  LinearOperator<S> along(const Vector<S>& x) const {
    const Eigen::Index n = dimension();
    LinearOperator<S> out = LinearOperator<S>::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) out.col(j) = apply(x, basis_vector<S>(n, j));
    return out;
  }

  friend bool operator==(const Connection& a, const Connection& b) { return a.coefficients == b.coefficients; }
};

/// Levi-Civita connection of a left-invariant metric via the Koszul formula,
/// 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
/// Throws Error(DegenerateMetric).
template <typename S>
Connection<S> levi_civita(const LieAlgebra<S>& alg, const BilinearForm<S>& gram) {
  const Eigen::Index n = alg.dimension();
  if (gram.rows() != n || gram.cols() != n) throw Error(ErrorCode::DimensionMismatch, "metric does not match algebra");
  const BilinearForm<S> inv = gram_inverse(gram);
  const auto& c = alg.constants;
  // g([e_a, e_b], e_k)
  DenseTensor<S, 3> bracket_lowered(n);
  bracket_lowered.for_each_index([&](const auto& idx) {
    S acc(0);
    for (Eigen::Index m = 0; m < n; ++m)
      if (!is_zero(c(idx[0], idx[1], m)) && !is_zero(gram(m, idx[2]))) acc += c(idx[0], idx[1], m) * gram(m, idx[2]);
    bracket_lowered.at(idx) = acc;
  });
  const S half = S(1) / S(2);
  DenseTensor<S, 3> lowered(n);
  lowered.for_each_index([&](const auto& idx) {
    const auto i = idx[0], j = idx[1], k = idx[2];
    lowered.at(idx) = half * (bracket_lowered(i, j, k) - bracket_lowered(j, k, i) + bracket_lowered(k, i, j));
  });
  DenseTensor<S, 3> gamma(n);
  gamma.for_each_index([&](const auto& idx) {
    S acc(0);
    for (Eigen::Index m = 0; m < n; ++m)
      if (!is_zero(inv(idx[2], m)) && !is_zero(lowered(idx[0], idx[1], m))) acc += inv(idx[2], m) * lowered(idx[0], idx[1], m);
    gamma.at(idx) = acc;
  });
  return Connection<S>(std::move(gamma));
}

/// Torsion residual T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j].
template <typename S>
DenseTensor<S, 3> torsion(const Connection<S>& conn, const LieAlgebra<S>& alg) {
  const Eigen::Index n = alg.dimension();
  DenseTensor<S, 3> out(n);
  out.for_each_index([&](const auto& idx) {
    const auto i = idx[0], j = idx[1], k = idx[2];
    out.at(idx) = conn.coefficients(i, j, k) - conn.coefficients(j, i, k) - alg.constants(i, j, k);
  });
  return out;
}

/// (nabla_i g)(e_j, e_k) = -g(nabla_i e_j, e_k) - g(e_j, nabla_i e_k).
template <typename S>
DenseTensor<S, 3> metric_derivative(const Connection<S>& conn, const BilinearForm<S>& gram) {
  const Eigen::Index n = conn.dimension();
  DenseTensor<S, 3> out(n);
  out.for_each_index([&](const auto& idx) {
    const auto i = idx[0], j = idx[1], k = idx[2];
    S acc(0);
    for (Eigen::Index m = 0; m < n; ++m) {
      acc -= conn.coefficients(i, j, m) * gram(m, k);
      acc -= conn.coefficients(i, k, m) * gram(j, m);
    }
    out.at(idx) = acc;
  });
  return out;
}

}  // namespace rsthl

#endif  // RSTHL_LIE_CONNECTION_HPP
