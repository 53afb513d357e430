#ifndef RSTHL_TENSOR_FRAME_HPP
#define RSTHL_TENSOR_FRAME_HPP

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsthl/scalar/eigen_support.hpp"

namespace rsthl {

template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
using Covector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

/// Square matrix acting on frame components: column j holds the image of e_j.
template <typename S>
using LinearOperator = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Gram-style table of a bilinear form: entry (i, j) is form(e_i, e_j).
template <typename S>
using BilinearForm = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Ordered, labelled basis. Labels are distinct and the dimension is their count.
class Frame {
public:
  Frame() = default;
  explicit Frame(std::vector<std::string> labels);
  /// Labels e1, e2, ..., e<dimension>.
  static Frame numbered(std::size_t dimension, const std::string& prefix = "e");

  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.labels_ == b.labels_; }

private:
  std::vector<std::string> labels_;
};

template <typename S>
Vector<S> basis_vector(Eigen::Index dimension, Eigen::Index i) {
  Vector<S> v = Vector<S>::Zero(dimension);
  v(i) = S(1);
  return v;
}

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Value of a bilinear form on two component vectors.
template <typename S>
S evaluate(const BilinearForm<S>& form, const Vector<S>& u, const Vector<S>& v) {
  S acc(0);
  for (Eigen::Index i = 0; i < form.rows(); ++i) {
    if (is_zero(u(i))) continue;
    for (Eigen::Index j = 0; j < form.cols(); ++j)
      if (!is_zero(v(j)) && !is_zero(form(i, j))) acc += u(i) * form(i, j) * v(j);
  }
  return acc;
}

template <typename S>
S dot(const Covector<S>& w, const Vector<S>& v) {
  S acc(0);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(w(i)) && !is_zero(v(i))) acc += w(i) * v(i);
  return acc;
}

}  // namespace rsthl

#endif  // RSTHL_TENSOR_FRAME_HPP
