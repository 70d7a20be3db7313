#include "stablesketch/stable.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stablesketch/errors.hpp"

namespace stablesketch {

namespace {

constexpr std::uint64_t kCfDomain = 0x63662d73616d706cULL;

struct Draw {
  double angle;  // U in (-pi/2, pi/2)
  double w;      // standard exponential
};

Draw draw(RandKey key) noexcept {
  return {std::numbers::pi * (uniform_open(key.with(0)) - 0.5), exponential(key.with(1))};
}

int sign_of(double x) noexcept { return (x > 0.0) - (x < 0.0); }

}  // namespace

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw ValidationError("alpha must lie in (0, 2], got " + std::to_string(alpha));
  }
}

double snap_alpha(double alpha) noexcept {
  if (std::abs(alpha - 1.0) < kAlphaSnap) return 1.0;
  if (std::abs(alpha - 2.0) < kAlphaSnap) return 2.0;
  return alpha;
}

void StableLaw::validate() const {
  require_alpha(alpha);
  if (!(scale >= 0.0)) throw ValidationError("stable scale must be >= 0");
}

double StableLaw::characteristic(double t) const {
  return std::exp(-scale * std::pow(std::abs(t), alpha));
}

double sample_stable(double alpha, RandKey key) {
  require_alpha(alpha);
  alpha = snap_alpha(alpha);
  const auto [u, w] = draw(key);
  if (alpha == 1.0) return std::tan(u);
  if (alpha == 2.0) return 2.0 * std::sqrt(w) * std::sin(u);
  return std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha) *
         std::pow(std::cos(u - alpha * u) / w, (1.0 - alpha) / alpha);
}

LogMagnitude sample_stable_log(double alpha, RandKey key) {
  require_alpha(alpha);
  alpha = snap_alpha(alpha);
  const auto [u, w] = draw(key);
  if (alpha == 1.0) {
    const double x = std::tan(u);
    return {sign_of(x), std::log(std::abs(x))};
  }
  if (alpha == 2.0) {
    const double s = std::sin(u);
    return {sign_of(s), std::log(2.0) + 0.5 * std::log(w) + std::log(std::abs(s))};
  }
  // cos(U) > 0 and cos((1 - alpha) U) > 0 on the open angle range.
  const double s = std::sin(alpha * u);
  const double log_abs = std::log(std::abs(s)) - std::log(std::cos(u)) / alpha +
                         (1.0 - alpha) / alpha * (std::log(std::cos(u - alpha * u)) - std::log(w));
  return {sign_of(s), log_abs};
}

RandKey empirical_cf_key(std::uint64_t seed, std::size_t m) noexcept {
  return RandKey(seed).with(kCfDomain).with(m);
}

double empirical_cf(double alpha, double t, std::size_t n, std::uint64_t seed) {
  require_alpha(alpha);
  if (n == 0) throw ValidationError("empirical_cf needs n >= 1");
  if (t == 0.0) return 1.0;
  double sum = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    sum += std::cos(t * sample_stable(alpha, empirical_cf_key(seed, m)));
  }
  return sum / static_cast<double>(n);
}

}  // namespace stablesketch
