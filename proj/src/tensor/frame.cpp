#include "rsthl/tensor/frame.hpp"

#include <set>

#include "rsthl/error.hpp"

namespace rsthl {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::DimensionMismatch, "duplicate frame label '" + l + "'");
}

Frame Frame::numbered(std::size_t dimension, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= dimension; ++i) labels.push_back(prefix + std::to_string(i));
  return Frame(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace rsthl
