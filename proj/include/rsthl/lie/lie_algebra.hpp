#ifndef RSTHL_LIE_LIE_ALGEBRA_HPP
#define RSTHL_LIE_LIE_ALGEBRA_HPP

#include <sstream>
#include <string>
#include <vector>

#include "rsthl/check.hpp"
#include "rsthl/error.hpp"
#include "rsthl/tensor/dense_tensor.hpp"

namespace rsthl {

/// Lie algebra given by structure constants on a frame:
/// [e_i, e_j] = sum_k constants(i, j, k) e_k.
template <typename S>
struct LieAlgebra {
  Frame frame;
  DenseTensor<S, 3> constants;

  LieAlgebra() = default;
  LieAlgebra(Frame f, DenseTensor<S, 3> c) : frame(std::move(f)), constants(std::move(c)) {
    if (constants.dimension() != static_cast<Eigen::Index>(frame.dimension()))
      throw Error(ErrorCode::DimensionMismatch, "structure constants do not match the frame");
  }

  static LieAlgebra abelian(Frame f) {
    const auto n = static_cast<Eigen::Index>(f.dimension());
    return LieAlgebra(std::move(f), DenseTensor<S, 3>(n));
  }

  Eigen::Index dimension() const { return constants.dimension(); }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(Eigen::Index i, Eigen::Index j, const Vector<S>& value) {
    for (Eigen::Index k = 0; k < dimension(); ++k) {
      constants(i, j, k) = value(k);
      constants(j, i, k) = -value(k);
    }
  }

  Vector<S> bracket(const Vector<S>& u, const Vector<S>& v) const {
    const Eigen::Index n = dimension();
    Vector<S> out = Vector<S>::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (is_zero(u(i))) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (is_zero(v(j))) continue;
        const S w = u(i) * v(j);
        for (Eigen::Index k = 0; k < n; ++k)
          if (!is_zero(constants(i, j, k))) out(k) += w * constants(i, j, k);
      }
    }
    return out;
  }

  Vector<S> bracket(Eigen::Index i, Eigen::Index j) const {
    Vector<S> out(dimension());
    for (Eigen::Index k = 0; k < dimension(); ++k) out(k) = constants(i, j, k);
    return out;
  }
};

/// Antisymmetry and Jacobi, checked component-wise. On failure the detail
/// names the first violating index pair or triple.
template <typename S>
CheckEntry validate_lie_algebra(const LieAlgebra<S>& alg) {
  const Eigen::Index n = alg.dimension();
  const auto& c = alg.constants;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k) + c(j, i, k))) {
          std::ostringstream os;
          os << "antisymmetry fails: c^" << k << "_{" << i << j << "} + c^" << k << "_{" << j << i << "} != 0";
          return make_entry("lie.structure-constants", "plumbing", false, os.str());
        }
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          S acc(0);
          for (Eigen::Index m = 0; m < n; ++m)
            acc += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          if (!is_zero(acc)) {
            std::ostringstream os;
            os << "Jacobi fails on (" << alg.frame.label(i) << "," << alg.frame.label(j) << ","
               << alg.frame.label(k) << ") in component " << alg.frame.label(l) << ": " << acc;
            return make_entry("lie.structure-constants", "plumbing", false, os.str());
          }
        }
  return make_entry("lie.structure-constants", "plumbing", true);
}

/// Direct sum a (+) b with frame labels concatenated; brackets between the
/// two summands vanish.
template <typename S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  std::vector<std::string> labels = a.frame.labels();
  labels.insert(labels.end(), b.frame.labels().begin(), b.frame.labels().end());
  const Eigen::Index na = a.dimension();
  DenseTensor<S, 3> c(na + b.dimension());
  a.constants.for_each_index([&](const auto& idx) { c(idx[0], idx[1], idx[2]) = a.constants.at(idx); });
  b.constants.for_each_index(
      [&](const auto& idx) { c(idx[0] + na, idx[1] + na, idx[2] + na) = b.constants.at(idx); });
  return LieAlgebra<S>(Frame(std::move(labels)), std::move(c));
}

template <typename S>
BilinearForm<S> block_diagonal(const BilinearForm<S>& a, const BilinearForm<S>& b) {
  BilinearForm<S> out = BilinearForm<S>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace rsthl

#endif  // RSTHL_LIE_LIE_ALGEBRA_HPP
