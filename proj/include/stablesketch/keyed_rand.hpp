#pragma once

#include <cmath>
#include <cstdint>

namespace stablesketch {

/// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t rotl64(std::uint64_t x, int r) noexcept {
  return (x << r) | (x >> (64 - r));
}

/**
 * Key into a counter-mode pseudorandom function.
 *
 * A key is a seed followed by an ordered tuple of 64-bit stream labels. Labels
 * are absorbed one at a time, so `RandKey(s).with(a).with(b)` names the stream
 * (s, a, b). Every variate is a pure function of the key: there is no generator
 * state, which makes results independent of evaluation order and thread
 * schedule, and lets a sparse vector touch only the streams of its nonzeros.
 */
class RandKey {
 public:
  constexpr explicit RandKey(std::uint64_t seed) noexcept
      : state_(mix64(seed + 0x6a09e667f3bcc909ULL)) {}

  /// Child stream obtained by appending `label` to this key's tuple.
  [[nodiscard]] constexpr RandKey with(std::uint64_t label) const noexcept {
    return RandKey(state_tag{}, mix64(rotl64(state_, 23) ^ mix64(label ^ 0xbb67ae8584caa73bULL)));
  }

  /// 64 pseudorandom bits for this stream.
  [[nodiscard]] constexpr std::uint64_t bits() const noexcept {
    return mix64(state_ ^ 0x3c6ef372fe94f82bULL);
  }

  friend constexpr bool operator==(const RandKey&, const RandKey&) = default;

 private:
  struct state_tag {};
  constexpr RandKey(state_tag, std::uint64_t state) noexcept : state_(state) {}

  std::uint64_t state_;
};

inline constexpr double kInv2Pow53 = 0x1.0p-53;

/// Uniform on [0,1): the 53 high bits of the stream divided by 2^53.
inline double uniform(RandKey key) noexcept {
  return static_cast<double>(key.bits() >> 11) * kInv2Pow53;
}

/// Uniform on the open interval (0,1), offset by half an ulp of the grid.
inline double uniform_open(RandKey key) noexcept {
  return (static_cast<double>(key.bits() >> 11) + 0.5) * kInv2Pow53;
}

/// -ln(1 - u): maps a uniform on [0,1) to a standard exponential.
inline double exponential_transform(double u) noexcept { return -std::log1p(-u); }

/// Standard exponential, -ln(1 - uniform(key)).
inline double exponential(RandKey key) noexcept { return exponential_transform(uniform(key)); }

/// Gamma(2,1) as the sum of the exponentials on sub-streams 0 and 1 of `key`.
inline double gamma2(RandKey key) noexcept {
  return exponential(key.with(0)) + exponential(key.with(1));
}

}  // namespace stablesketch
