#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stablesketch/cws.hpp"
#include "stablesketch/sign_projection.hpp"

namespace stablesketch {

// Agreement counting. Sketches must share a config fingerprint and size;
// ConfigMismatchError otherwise.

/// Positions where two sign sketches agree: k - popcount(a xor b).
[[nodiscard]] std::size_t agreement_count(const SignSketch& a, const SignSketch& b);
/// Positions where two CWS sketches selected the same coordinate.
[[nodiscard]] std::size_t agreement_count(const CwsSketch& a, const CwsSketch& b);

/// agreement_count / k, the unbiased estimate of the collision probability.
[[nodiscard]] double collision_fraction(const SignSketch& a, const SignSketch& b);
[[nodiscard]] double collision_fraction(const CwsSketch& a, const CwsSketch& b);

/// Dense symmetric n x n matrix, row-major.
class KernelMatrix {
 public:
  KernelMatrix() = default;
  KernelMatrix(std::size_t n, std::string kind) : n_(n), kind_(std::move(kind)), data_(n * n) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::string kind_;
  std::vector<double> data_;
};

/// Pairwise collision fractions. Rows are filled in parallel; each entry is
/// computed independently, so the result does not depend on `threads`.
[[nodiscard]] KernelMatrix kernel_matrix(std::span<const SignSketch> sketches, unsigned threads = 1);
[[nodiscard]] KernelMatrix kernel_matrix(std::span<const CwsSketch> sketches, unsigned threads = 1);

}  // namespace stablesketch
