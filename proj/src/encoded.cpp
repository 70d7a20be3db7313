#include "stablesketch/encoded.hpp"

#include "stablesketch/errors.hpp"

namespace stablesketch {

EncodedFeatures::EncodedFeatures(std::size_t block, std::vector<std::size_t> ones)
    : block_(block), ones_(std::move(ones)) {
  if (block_ == 0) throw ValidationError("encoded features: block size must be positive");
  for (std::size_t b = 0; b < ones_.size(); ++b) {
    if (ones_[b] < b * block_ || ones_[b] >= (b + 1) * block_) {
      throw ValidationError("encoded features: position outside its block");
    }
  }
}

std::size_t dot(const EncodedFeatures& a, const EncodedFeatures& b) {
  if (a.block() != b.block() || a.blocks() != b.blocks()) {
    throw ConfigMismatchError("encoded features have different shapes");
  }
  // One position per block, so the merge reduces to a blockwise comparison.
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.blocks(); ++i) n += a.ones()[i] == b.ones()[i];
  return n;
}

}  // namespace stablesketch
