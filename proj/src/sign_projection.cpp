#include "stablesketch/sign_projection.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "batch_layout.hpp"
#include "stablesketch/errors.hpp"
#include "stablesketch/keyed_rand.hpp"
#include "stablesketch/parallel.hpp"
#include "stablesketch/stable.hpp"

namespace stablesketch {

namespace {

constexpr std::uint64_t kSignDomain = 0x7369676e2d70726aULL;

void check_vector(const SparseVector& v, const SketchConfig& cfg, std::size_t position) {
  if (v.dim() != cfg.dim) {
    throw ValidationError("vector " + std::to_string(position) + " has dimension " +
                          std::to_string(v.dim()) + ", sketch config expects " +
                          std::to_string(cfg.dim));
  }
  if (v.empty()) {
    throw ValidationError("vector " + std::to_string(position) +
                          " is all-zero; its sign sketch would be degenerate");
  }
}

}  // namespace

RandKey projection_key(std::uint64_t seed, std::size_t j, std::size_t i) noexcept {
  return RandKey(seed).with(kSignDomain).with(j).with(i);
}

void SketchConfig::validate() const {
  require_alpha(alpha);
  if (k == 0) throw ValidationError("sketch size k must be >= 1");
}

std::uint64_t SketchConfig::fingerprint() const noexcept {
  std::uint64_t h = mix64(kSignDomain);
  h = mix64(h ^ std::bit_cast<std::uint64_t>(snap_alpha(alpha)));
  h = mix64(h ^ static_cast<std::uint64_t>(k));
  h = mix64(h ^ seed);
  h = mix64(h ^ static_cast<std::uint64_t>(dim));
  return h;
}

SignSketch project_sign(const SparseVector& v, const SketchConfig& cfg, unsigned threads) {
  return std::move(project_sign_batch(std::span(&v, 1), cfg, threads).front());
}

std::vector<SignSketch> project_sign_batch(std::span<const SparseVector> vectors,
                                           const SketchConfig& cfg, unsigned threads) {
  cfg.validate();
  for (std::size_t n = 0; n < vectors.size(); ++n) check_vector(vectors[n], cfg, n);

  const double alpha = snap_alpha(cfg.alpha);
  const std::uint64_t fp = cfg.fingerprint();
  std::vector<SignSketch> out(vectors.size(), SignSketch(cfg.k, fp));
  if (vectors.empty()) return out;

  const detail::BatchLayout layout(vectors);
  const std::size_t groups = layout.coords.size();
  const bool log_domain = alpha < kLogDomainAlpha;

  std::vector<double> log_value;
  if (log_domain) {
    log_value.reserve(layout.entries.size());
    for (const auto& e : layout.entries) log_value.push_back(std::log(std::abs(e.value)));
  }

  const RandKey root = RandKey(cfg.seed).with(kSignDomain);

  // Each chunk covers whole 64-bit words, so workers never write the same word.
  parallel_chunks(cfg.k, 64, threads, [&](std::size_t j_begin, std::size_t j_end) {
    std::vector<double> acc(vectors.size());
    std::vector<double> peak(vectors.size());
    std::vector<LogMagnitude> draws(log_domain ? groups : 0);
    for (std::size_t j = j_begin; j < j_end; ++j) {
      const RandKey column = root.with(j);
      std::fill(acc.begin(), acc.end(), 0.0);
      if (!log_domain) {
        for (std::size_t g = 0; g < groups; ++g) {
          const double s = sample_stable(alpha, column.with(layout.coords[g]));
          for (std::size_t e = layout.group_start[g]; e < layout.group_start[g + 1]; ++e) {
            acc[layout.entries[e].vec] += layout.entries[e].value * s;
          }
        }
      } else {
        // x_j = exp(M) * sum sign * exp(l - M) with M the largest log-term of
        // the vector; the positive factor exp(M) does not change the sign.
        std::fill(peak.begin(), peak.end(), -std::numeric_limits<double>::infinity());
        for (std::size_t g = 0; g < groups; ++g) {
          draws[g] = sample_stable_log(alpha, column.with(layout.coords[g]));
          if (draws[g].sign == 0) continue;
          for (std::size_t e = layout.group_start[g]; e < layout.group_start[g + 1]; ++e) {
            auto& p = peak[layout.entries[e].vec];
            p = std::max(p, log_value[e] + draws[g].log_abs);
          }
        }
        for (std::size_t g = 0; g < groups; ++g) {
          if (draws[g].sign == 0) continue;
          for (std::size_t e = layout.group_start[g]; e < layout.group_start[g + 1]; ++e) {
            const auto& entry = layout.entries[e];
            const int sign = entry.value > 0.0 ? draws[g].sign : -draws[g].sign;
            acc[entry.vec] += sign * std::exp(log_value[e] + draws[g].log_abs - peak[entry.vec]);
          }
        }
      }
      for (std::size_t n = 0; n < vectors.size(); ++n) out[n].set(j, acc[n] > 0.0);
    }
  });
  return out;
}

EncodedFeatures encode_sign(const SignSketch& s) {
  std::vector<std::size_t> ones(s.k());
  for (std::size_t j = 0; j < s.k(); ++j) ones[j] = s.bit(j) ? 2 * j : 2 * j + 1;
  return EncodedFeatures(2, std::move(ones));
}

}  // namespace stablesketch
