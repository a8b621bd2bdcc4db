#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "tdhom/error.hpp"
#include "tdhom/permutation.hpp"
#include "tdhom/scalar.hpp"

namespace tdhom {

/// Row-major dense tensor of exact scalars.
class DenseTensor {
 public:
  DenseTensor() = default;

  explicit DenseTensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), entries_(count(shape_), Scalar(0)) {}

  DenseTensor(std::vector<std::size_t> shape, Vector entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != count(shape_)) throw ShapeError("entry count does not match tensor shape");
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t order() const { return shape_.size(); }
  const Vector& entries() const { return entries_; }

  std::size_t offset(const std::vector<std::size_t>& index) const {
    if (index.size() != shape_.size()) throw ShapeError("index length does not match tensor order");
    std::size_t off = 0;
    for (std::size_t k = 0; k < shape_.size(); ++k) {
      if (index[k] >= shape_[k]) throw ShapeError("tensor index out of range");
      off = off * shape_[k] + index[k];
    }
    return off;
  }

  const Scalar& at(const std::vector<std::size_t>& index) const { return entries_[offset(index)]; }
  Scalar& at(const std::vector<std::size_t>& index) { return entries_[offset(index)]; }

  /// Visits every multi-index in row-major order.
  void for_each_index(const std::function<void(const std::vector<std::size_t>&)>& fn) const {
    if (entries_.empty()) return;
    std::vector<std::size_t> idx(shape_.size(), 0);
    for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
      fn(idx);
      for (std::size_t k = shape_.size(); k-- > 0;) {
        if (++idx[k] < shape_[k]) break;
        idx[k] = 0;
      }
    }
  }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  static std::size_t count(const std::vector<std::size_t>& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  }

  std::vector<std::size_t> shape_;
  Vector entries_;
};

/// Permutes tensor legs: the output entry at (i_{σ(0)}, …, i_{σ(n−1)}) equals
/// the input entry at (i_0, …, i_{n−1}). On simple tensors this sends
/// x_0⊗…⊗x_{n−1} to x_{σ(0)}⊗…⊗x_{σ(n−1)}.
inline DenseTensor tensor_leg_permute(const DenseTensor& t, const Permutation& p) {
  if (p.size() != t.order()) throw ShapeError("permutation size does not match tensor order");
  DenseTensor out(p.apply_to(t.shape()));
  t.for_each_index([&](const std::vector<std::size_t>& idx) { out.at(p.apply_to(idx)) = t.at(idx); });
  return out;
}

}  // namespace tdhom
