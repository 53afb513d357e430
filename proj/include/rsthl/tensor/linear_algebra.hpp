#ifndef RSTHL_TENSOR_LINEAR_ALGEBRA_HPP
#define RSTHL_TENSOR_LINEAR_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "rsthl/error.hpp"
#include "rsthl/tensor/frame.hpp"

namespace rsthl {

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

/// Bareiss fraction-free forward elimination, in place. Returns the pivot
/// columns in row order; `sign` tracks row swaps for determinants.
template <typename S>
std::vector<Eigen::Index> bareiss_eliminate(Matrix<S>& m, Eigen::Index pivot_cols, int* sign = nullptr) {
  std::vector<Eigen::Index> pivots;
  S previous(1);
  Eigen::Index row = 0;
  if (sign) *sign = 1;
  for (Eigen::Index col = 0; col < pivot_cols && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      m.row(p).swap(m.row(row));
      if (sign) *sign = -*sign;
    }
    const S pivot = m(row, col);
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      const S factor = m(i, col);
      for (Eigen::Index j = col + 1; j < m.cols(); ++j) {
        S updated = pivot * m(i, j);
        if (!is_zero(factor) && !is_zero(m(row, j))) updated -= factor * m(row, j);
        m(i, j) = updated / previous;
      }
      m(i, col) = S(0);
    }
    previous = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <typename S>
S trace(const LinearOperator<S>& op) {
  if (op.rows() != op.cols()) throw Error(ErrorCode::DimensionMismatch, "trace of a non-square operator");
  S acc(0);
  for (Eigen::Index i = 0; i < op.rows(); ++i) acc += op(i, i);
  return acc;
}

template <typename S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return S(1);
  int sign = 1;
  const auto pivots = detail::bareiss_eliminate(m, m.cols(), &sign);
  if (static_cast<Eigen::Index>(pivots.size()) < m.rows()) return S(0);
  const S& last = m(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? last : -last;
}

template <typename S>
Eigen::Index rank(Matrix<S> m) {
  return static_cast<Eigen::Index>(detail::bareiss_eliminate(m, m.cols()).size());
}

/// Solution set of A x = b: x = particular + nullspace * t for free t.
template <typename S>
struct LinearSolution {
  Vector<S> particular;
  Matrix<S> nullspace;  // columns span the kernel of A

  bool unique() const { return nullspace.cols() == 0; }
};

/// Exact general solve of a (possibly non-square) system. Throws
/// Error(InconsistentSystem) when no solution exists.
template <typename S>
LinearSolution<S> solve_general(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  const Eigen::Index n = a.cols();
  Matrix<S> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = detail::bareiss_eliminate(aug, n);
  const auto r = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index i = r; i < aug.rows(); ++i)
    if (!is_zero(aug(i, n)))
      throw Error(ErrorCode::InconsistentSystem, "equation " + std::to_string(i) + " reduces to 0 = nonzero");

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  // Back substitution for a given right-hand column with the free variables fixed.
  auto back_substitute = [&](const Vector<S>& rhs, Vector<S> x) {
    for (Eigen::Index i = r - 1; i >= 0; --i) {
      const Eigen::Index c = pivots[static_cast<std::size_t>(i)];
      S acc = rhs(i);
      for (Eigen::Index j = c + 1; j < n; ++j)
        if (!is_zero(aug(i, j)) && !is_zero(x(j))) acc -= aug(i, j) * x(j);
      x(c) = acc / aug(i, c);
    }
    return x;
  };

  LinearSolution<S> out;
  Vector<S> rhs = aug.col(n).head(std::max<Eigen::Index>(r, 0));
  out.particular = back_substitute(rhs, Vector<S>::Zero(n));

  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  out.nullspace = Matrix<S>::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    Vector<S> x = Vector<S>::Zero(n);
    x(free[f]) = S(1);
    Vector<S> zero_rhs = Vector<S>::Zero(r);
    out.nullspace.col(static_cast<Eigen::Index>(f)) = back_substitute(zero_rhs, x);
  }
  return out;
}

/// Unique solution of A x = b. Throws Error(InconsistentSystem) or
/// Error(UnderdeterminedSystem).
template <typename S>
Vector<S> linear_solve(const Matrix<S>& a, const Vector<S>& b) {
  LinearSolution<S> sol = solve_general(a, b);
  if (!sol.unique())
    throw Error(ErrorCode::UnderdeterminedSystem,
                "solution family has " + std::to_string(sol.nullspace.cols()) + " free parameter(s)");
  return sol.particular;
}

/// Exact inverse; Error(DegenerateMetric) when singular.
template <typename S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<S>::Identity(n, n);
  const auto pivots = detail::bareiss_eliminate(aug, n);
  if (static_cast<Eigen::Index>(pivots.size()) < n) throw Error(ErrorCode::DegenerateMetric, "matrix is singular");
  Matrix<S> out(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      S acc = aug(i, n + k);
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (!is_zero(aug(i, j)) && !is_zero(out(j, k))) acc -= aug(i, j) * out(j, k);
      out(i, k) = acc / aug(i, i);
    }
  }
  return out;
}

/// Inverse of a symmetric Gram table. Error(DegenerateMetric) when its
/// determinant is the zero rational function.
template <typename S>
BilinearForm<S> gram_inverse(const BilinearForm<S>& gram) {
  if (gram.rows() != gram.cols()) throw Error(ErrorCode::DimensionMismatch, "Gram table is not square");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i))
        throw Error(ErrorCode::DimensionMismatch,
                    "Gram table is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (is_zero(determinant(gram))) throw Error(ErrorCode::DegenerateMetric, "Gram determinant vanishes identically");
  return inverse(gram);
}

template <typename S>
bool is_symmetric(const BilinearForm<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace rsthl

#endif  // RSTHL_TENSOR_LINEAR_ALGEBRA_HPP
