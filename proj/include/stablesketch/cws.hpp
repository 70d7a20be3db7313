#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stablesketch/encoded.hpp"
#include "stablesketch/keyed_rand.hpp"
#include "stablesketch/sparse_vector.hpp"

namespace stablesketch {

inline constexpr std::size_t kDefaultBuckets = 256;

/// Parameters of a family of 0-bit CWS sketches.
struct CwsConfig {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;

  void validate() const;
  [[nodiscard]] std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const CwsConfig&, const CwsConfig&) = default;
};

/// One consistent weighted sample: the selected coordinate and its integer level.
struct CwsSample {
  std::size_t index = 0;
  std::int64_t level = 0;

  friend bool operator==(const CwsSample&, const CwsSample&) = default;
};

/// The k coordinates selected by 0-bit CWS; levels are discarded.
class CwsSketch {
 public:
  CwsSketch() = default;
  CwsSketch(std::vector<std::size_t> ids, std::uint64_t fingerprint)
      : ids_(std::move(ids)), fingerprint_(fingerprint) {}

  [[nodiscard]] std::size_t k() const noexcept { return ids_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& ids() const noexcept { return ids_; }
  [[nodiscard]] std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const CwsSketch&, const CwsSketch&) = default;

 private:
  std::vector<std::size_t> ids_;
  std::uint64_t fingerprint_ = 0;
};

/// Stream of coordinate i in sample j: r, c and b use its sub-streams 0, 1, 2.
[[nodiscard]] RandKey cws_key(std::uint64_t seed, std::size_t j, std::size_t i) noexcept;

/**
 * Sample j of consistent weighted sampling over the nonzero weights S_i of v.
 *
 * For each nonzero i, with r_i, c_i ~ Gamma(2,1) and b_i ~ U(0,1) keyed by
 * (seed, j, i):
 *   t_i = floor(ln S_i / r_i + b_i),  y_i = exp(r_i (t_i - b_i)),
 *   a_i = c_i / (y_i exp(r_i)),
 * and the sample is (argmin_i a_i, t at the argmin). Pr(index = i) is
 * S_i / sum S, and two vectors collide on (index, level) with probability equal
 * to their min-max kernel. Throws ValidationError on a negative entry or an
 * all-zero vector.
 */
[[nodiscard]] CwsSample cws_sample(const SparseVector& v, std::uint64_t seed, std::size_t j);

/// k samples of v with levels dropped. Throws ValidationError for k == 0.
[[nodiscard]] CwsSketch cws_sketch(const SparseVector& v, std::size_t k, std::uint64_t seed,
                                   unsigned threads = 1);

/// Sketches of vectors sharing one dimension; each (j, i) draw is made once.
[[nodiscard]] std::vector<CwsSketch> cws_sketch_batch(std::span<const SparseVector> vectors,
                                                      std::size_t k, std::uint64_t seed,
                                                      unsigned threads = 1);

/// Bucket of a coordinate id: splitmix64 finalizer of the id, modulo `buckets`.
[[nodiscard]] std::size_t cws_bucket(std::size_t id, std::size_t buckets) noexcept;

/// One-hot expansion of length k * buckets; block j is set at cws_bucket(ids[j]).
/// Throws ValidationError when buckets < 2.
[[nodiscard]] EncodedFeatures encode_cws(const CwsSketch& s, std::size_t buckets = kDefaultBuckets);

}  // namespace stablesketch
