#ifndef RSTHL_TENSOR_DENSE_TENSOR_HPP
#define RSTHL_TENSOR_DENSE_TENSOR_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "rsthl/tensor/frame.hpp"

namespace rsthl {

/// Fully indexed table over a frame of fixed dimension, Rank indices each in
/// [0, dimension). All components are stored; frames here have at most five
/// vectors. Used for trilinear and quadrilinear forms, connection coefficients
/// and (1,3) curvature tables.
template <typename S, int Rank>
class DenseTensor {
  static_assert(Rank >= 1 && Rank <= 4, "DenseTensor supports rank 1..4");

public:
  using Index = std::array<Eigen::Index, Rank>;

  DenseTensor() = default;
  explicit DenseTensor(Eigen::Index dimension) : dim_(dimension), data_(size_for(dimension), S(0)) {}

  static DenseTensor Zero(Eigen::Index dimension) { return DenseTensor(dimension); }

  Eigen::Index dimension() const noexcept { return dim_; }

  template <typename... I>
  S& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<Eigen::Index>(idx)...})];
  }
  template <typename... I>
  const S& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<Eigen::Index>(idx)...})];
  }
  S& at(const Index& idx) { return data_[offset(idx)]; }
  const S& at(const Index& idx) const { return data_[offset(idx)]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!rsthl::is_zero(x)) return false;
    return true;
  }

  /// First index (lexicographic) whose component is nonzero.
  std::optional<Index> first_nonzero() const {
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!rsthl::is_zero(data_[k])) return unflatten(k);
    return std::nullopt;
  }

  /// Visits every multi-index in lexicographic order.
  template <typename F>
  void for_each_index(F&& f) const {
    for (std::size_t k = 0; k < data_.size(); ++k) f(unflatten(k));
  }

  DenseTensor& operator+=(const DenseTensor& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseTensor& operator-=(const DenseTensor& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  DenseTensor& operator*=(const S& factor) {
    for (auto& x : data_) x *= factor;
    return *this;
  }
  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(const S& factor, DenseTensor a) { return a *= factor; }
  friend bool operator==(const DenseTensor& a, const DenseTensor& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }
  friend bool operator!=(const DenseTensor& a, const DenseTensor& b) { return !(a == b); }

private:
  static std::size_t size_for(Eigen::Index dimension) {
    std::size_t n = 1;
    for (int r = 0; r < Rank; ++r) n *= static_cast<std::size_t>(dimension);
    return n;
  }

  std::size_t offset(const Index& idx) const {
    std::size_t k = 0;
    for (int r = 0; r < Rank; ++r) {
      eigen_assert(idx[r] >= 0 && idx[r] < dim_);
      k = k * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[r]);
    }
    return k;
  }

  Index unflatten(std::size_t k) const {
    Index idx{};
    for (int r = Rank - 1; r >= 0; --r) {
      idx[r] = static_cast<Eigen::Index>(k % static_cast<std::size_t>(dim_));
      k /= static_cast<std::size_t>(dim_);
    }
    return idx;
  }

  Eigen::Index dim_ = 0;
  std::vector<S> data_;
};

template <typename S>
using TrilinearForm = DenseTensor<S, 3>;

template <typename S>
using QuadrilinearForm = DenseTensor<S, 4>;

/// Value of a trilinear form on component vectors.
template <typename S>
S evaluate(const TrilinearForm<S>& t, const Vector<S>& u, const Vector<S>& v, const Vector<S>& w) {
  S acc(0);
  const Eigen::Index n = t.dimension();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (is_zero(u(i))) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_zero(v(j))) continue;
      for (Eigen::Index k = 0; k < n; ++k)
        if (!is_zero(w(k)) && !is_zero(t(i, j, k))) acc += u(i) * v(j) * w(k) * t(i, j, k);
    }
  }
  return acc;
}

/// Value of a quadrilinear form on component vectors.
template <typename S>
S evaluate(const QuadrilinearForm<S>& t, const Vector<S>& x, const Vector<S>& y, const Vector<S>& z,
           const Vector<S>& w) {
  S acc(0);
  const Eigen::Index n = t.dimension();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_zero(y(j))) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (is_zero(z(k))) continue;
        for (Eigen::Index l = 0; l < n; ++l)
          if (!is_zero(w(l)) && !is_zero(t(i, j, k, l))) acc += x(i) * y(j) * z(k) * w(l) * t(i, j, k, l);
      }
    }
  }
  return acc;
}

/// Pulls a quadrilinear form back along the same operator in every slot:
/// result(X, Y, Z, W) = t(A X, A Y, A Z, A W).
template <typename S>
QuadrilinearForm<S> pullback(const QuadrilinearForm<S>& t, const LinearOperator<S>& a) {
  const Eigen::Index n = t.dimension();
  QuadrilinearForm<S> out(n);
  out.for_each_index([&](const auto& idx) {
    out.at(idx) = evaluate(t, Vector<S>(a.col(idx[0])), Vector<S>(a.col(idx[1])), Vector<S>(a.col(idx[2])),
                           Vector<S>(a.col(idx[3])));
  });
  return out;
}

}  // namespace rsthl

#endif  // RSTHL_TENSOR_DENSE_TENSOR_HPP
