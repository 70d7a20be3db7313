#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stablesketch {

/**
 * Sparse real vector over a dimension D.
 *
 * Indices are 0-based, strictly increasing and < D; stored values are finite
 * and nonzero. Zeros passed to the constructors are dropped, so a vector with
 * explicit zeros and one without them compare equal.
 */
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  SparseVector(std::size_t dim, std::vector<std::size_t> indices, std::vector<double> values);

  static SparseVector from_dense(std::span<const double> dense);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return indices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
  [[nodiscard]] std::span<const std::size_t> indices() const noexcept { return indices_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  [[nodiscard]] std::vector<double> to_dense() const;
  /// Every value multiplied by c; c = 0 yields the empty vector.
  [[nodiscard]] SparseVector scaled(double c) const;
  /// Same entries over a larger dimension. Throws if new_dim < dim().
  [[nodiscard]] SparseVector with_dim(std::size_t new_dim) const;

  [[nodiscard]] bool nonnegative() const noexcept;
  [[nodiscard]] double sum() const noexcept;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> indices_;
  std::vector<double> values_;
};

}  // namespace stablesketch
