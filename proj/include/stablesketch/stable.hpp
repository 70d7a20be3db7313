#pragma once

#include <cstddef>
#include <cstdint>

#include "stablesketch/keyed_rand.hpp"

namespace stablesketch {

/// Surrogate used whenever a caller asks for the alpha -> 0+ limit.
inline constexpr double kAlphaZeroPlus = 0.01;

/// Alphas within this distance of 1 or 2 are evaluated by the exact special case.
inline constexpr double kAlphaSnap = 1e-9;

/**
 * Symmetric alpha-stable law S(alpha, d) with characteristic function
 * exp(-d |t|^alpha). alpha = 2 is N(0, 2d); alpha = 1 with d = 1 is the
 * standard Cauchy.
 */
struct StableLaw {
  double alpha = 2.0;
  double scale = 1.0;

  /// Throws ValidationError unless alpha is in (0,2] and scale >= 0.
  void validate() const;
  [[nodiscard]] double characteristic(double t) const;
};

/// Throws ValidationError unless 0 < alpha <= 2 (NaN rejected).
void require_alpha(double alpha);

/// Maps alpha to 1 or 2 when it lies within kAlphaSnap of either.
[[nodiscard]] double snap_alpha(double alpha) noexcept;

/**
 * One S(alpha, 1) variate by the Chambers-Mallows-Stuck transform.
 *
 * The angle U is uniform on (-pi/2, pi/2) from sub-stream 0 of `key` and W is
 * standard exponential from sub-stream 1. The general branch returns
 *   sin(aU) / cos(U)^(1/a) * (cos(U - aU) / W)^((1-a)/a);
 * alpha = 1 returns tan(U) and alpha = 2 returns 2 sqrt(W) sin(U).
 *
 * For small alpha the value overflows double range; use
 * sample_stable_log there.
 */
[[nodiscard]] double sample_stable(double alpha, RandKey key);

/// A stable variate as sign (-1, 0, +1) and natural log of its magnitude.
struct LogMagnitude {
  int sign = 0;
  double log_abs = 0.0;
};

/// Same draw as sample_stable(alpha, key), evaluated in the log domain.
[[nodiscard]] LogMagnitude sample_stable_log(double alpha, RandKey key);

/// (1/n) * sum of cos(t * X_m) over n variates keyed by (seed, m).
[[nodiscard]] double empirical_cf(double alpha, double t, std::size_t n, std::uint64_t seed);

/// Keys used by empirical_cf for sample m; exposed so tests can replay them.
[[nodiscard]] RandKey empirical_cf_key(std::uint64_t seed, std::size_t m) noexcept;

}  // namespace stablesketch
