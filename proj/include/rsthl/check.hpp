#ifndef RSTHL_CHECK_HPP
#define RSTHL_CHECK_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsthl/tensor/dense_tensor.hpp"

namespace rsthl {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

/// One verified identity. `anchor` names the identity family the check
/// belongs to, or "plumbing" for internal consistency checks. `residual_zero`
/// is true when the residual vanished identically (false for skipped entries).
struct CheckEntry {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::Skipped;
  bool residual_zero = false;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
};

inline CheckEntry make_entry(std::string name, std::string anchor, bool ok, std::string detail = {}) {
  CheckEntry e{std::move(name), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail, ok, std::move(detail)};
  return e;
}

inline CheckEntry skipped_entry(std::string name, std::string anchor, std::string reason) {
  return CheckEntry{std::move(name), std::move(anchor), CheckStatus::Skipped, false, std::move(reason)};
}

namespace detail {

template <typename Idx>
std::string format_index(const Idx& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
  os << ")";
  return os.str();
}

}  // namespace detail

/// Pass iff every component of the residual vanishes; otherwise the detail
/// names the first nonzero component.
template <typename S, int Rank>
CheckEntry residual_entry(std::string name, std::string anchor, const DenseTensor<S, Rank>& residual) {
  if (auto idx = residual.first_nonzero()) {
    std::ostringstream os;
    os << "nonzero residual at " << detail::format_index(*idx) << ": " << residual.at(*idx);
    return make_entry(std::move(name), std::move(anchor), false, os.str());
  }
  return make_entry(std::move(name), std::move(anchor), true);
}

template <typename Derived>
CheckEntry residual_entry(std::string name, std::string anchor, const Eigen::MatrixBase<Derived>& residual) {
  for (Eigen::Index i = 0; i < residual.rows(); ++i)
    for (Eigen::Index j = 0; j < residual.cols(); ++j)
      if (!is_zero(residual(i, j))) {
        std::ostringstream os;
        os << "nonzero residual at (" << i << "," << j << "): " << residual(i, j);
        return make_entry(std::move(name), std::move(anchor), false, os.str());
      }
  return make_entry(std::move(name), std::move(anchor), true);
}

template <typename S>
CheckEntry scalar_entry(std::string name, std::string anchor, const S& residual) {
  if (is_zero(residual)) return make_entry(std::move(name), std::move(anchor), true);
  std::ostringstream os;
  os << "nonzero residual: " << residual;
  return make_entry(std::move(name), std::move(anchor), false, os.str());
}

}  // namespace rsthl

#endif  // RSTHL_CHECK_HPP
