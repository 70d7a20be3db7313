#pragma once

#include <cstddef>
#include <vector>

namespace stablesketch {

/**
 * Binary feature vector made of equal one-hot blocks: `length() / block()`
 * blocks, each carrying exactly one set position. Sign sketches use blocks
 * of 2, 0-bit CWS sketches blocks of B buckets.
 */
class EncodedFeatures {
 public:
  EncodedFeatures() = default;
  /// `ones` must hold exactly one position per block, in block order.
  EncodedFeatures(std::size_t block, std::vector<std::size_t> ones);

  [[nodiscard]] std::size_t length() const noexcept { return block_ * ones_.size(); }
  [[nodiscard]] std::size_t block() const noexcept { return block_; }
  [[nodiscard]] std::size_t blocks() const noexcept { return ones_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& ones() const noexcept { return ones_; }

  friend bool operator==(const EncodedFeatures&, const EncodedFeatures&) = default;

 private:
  std::size_t block_ = 0;
  std::vector<std::size_t> ones_;
};

/// Inner product of two encodings of the same shape; throws ConfigMismatchError otherwise.
[[nodiscard]] std::size_t dot(const EncodedFeatures& a, const EncodedFeatures& b);

}  // namespace stablesketch
