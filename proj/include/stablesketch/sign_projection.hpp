#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stablesketch/encoded.hpp"
#include "stablesketch/keyed_rand.hpp"
#include "stablesketch/sparse_vector.hpp"

namespace stablesketch {

/// Parameters of one family of sign sketches. Sketches compare only under identical configs.
struct SketchConfig {
  double alpha = 2.0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;

  /// alpha in (0,2] and k >= 1.
  void validate() const;
  [[nodiscard]] std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const SketchConfig&, const SketchConfig&) = default;
};

/// Stream of s_ij: (seed, sign-projection domain, j, i).
[[nodiscard]] RandKey projection_key(std::uint64_t seed, std::size_t j, std::size_t i) noexcept;

/// Below this alpha the projection is accumulated in the log domain to avoid overflow.
inline constexpr double kLogDomainAlpha = 0.5;

/// k sign bits, packed 64 per word; bit j is set iff the j-th projection is > 0.
class SignSketch {
 public:
  SignSketch() = default;
  SignSketch(std::size_t k, std::uint64_t fingerprint)
      : k_(k), fingerprint_(fingerprint), words_((k + 63) / 64, 0) {}

  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  [[nodiscard]] bool bit(std::size_t j) const noexcept { return (words_[j >> 6] >> (j & 63)) & 1U; }
  void set(std::size_t j, bool value) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (j & 63);
    words_[j >> 6] = value ? (words_[j >> 6] | m) : (words_[j >> 6] & ~m);
  }
  /// Packed bits; bits past k in the last word are zero.
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const SignSketch&, const SignSketch&) = default;

 private:
  std::size_t k_ = 0;
  std::uint64_t fingerprint_ = 0;
  std::vector<std::uint64_t> words_;
};

/**
 * Sign alpha-stable random projection of one vector.
 *
 * x_j = sum_i v_i s_ij with s_ij ~ S(alpha, 1) drawn from the stream
 * (seed, j, i), so a coordinate receives the same s_ij in every vector.
 * Bit j is x_j > 0. Summation runs over nonzeros in ascending index order.
 * Throws ValidationError on dimension mismatch or an empty vector.
 */
[[nodiscard]] SignSketch project_sign(const SparseVector& v, const SketchConfig& cfg,
                                      unsigned threads = 1);

/// Sketches of many vectors. Each s_ij is drawn once and shared by every
/// vector that has coordinate i; output equals per-vector project_sign.
[[nodiscard]] std::vector<SignSketch> project_sign_batch(std::span<const SparseVector> vectors,
                                                         const SketchConfig& cfg,
                                                         unsigned threads = 1);

/// Length-2k one-hot coding: position 2j if bit j is set, else 2j+1.
[[nodiscard]] EncodedFeatures encode_sign(const SignSketch& s);

}  // namespace stablesketch
