#include "stablesketch/cws.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "batch_layout.hpp"
#include "stablesketch/errors.hpp"
#include "stablesketch/keyed_rand.hpp"
#include "stablesketch/parallel.hpp"

namespace stablesketch {

namespace {

constexpr std::uint64_t kCwsDomain = 0x6377732d73616d70ULL;

void check_vector(const SparseVector& v, std::size_t position) {
  if (!v.nonnegative()) {
    throw ValidationError("vector " + std::to_string(position) +
                          " has a negative entry; CWS needs nonnegative data");
  }
  if (v.empty()) {
    throw ValidationError("vector " + std::to_string(position) + " is all-zero");
  }
}

struct Draws {
  double r;
  double log_c;
  double beta;
};

Draws draws(RandKey key) noexcept {
  // Gamma(2,1) is zero with probability 2^-106; keep ln S / r finite regardless.
  const double r = std::max(gamma2(key.with(0)), std::numeric_limits<double>::min());
  return {r, std::log(gamma2(key.with(1))), uniform(key.with(2))};
}

struct Candidate {
  double level;  // t_i, an integer held as double
  double log_a;  // ln a_i = ln c_i - r_i (t_i - b_i) - r_i
};

Candidate candidate(const Draws& d, double log_weight) noexcept {
  const double t = std::floor(log_weight / d.r + d.beta);
  return {t, d.log_c - d.r * (t - d.beta) - d.r};
}

RandKey sample_key(std::uint64_t seed, std::size_t j) noexcept {
  return RandKey(seed).with(kCwsDomain).with(j);
}

}  // namespace

RandKey cws_key(std::uint64_t seed, std::size_t j, std::size_t i) noexcept {
  return sample_key(seed, j).with(i);
}

void CwsConfig::validate() const {
  if (k == 0) throw ValidationError("CWS sample count k must be >= 1");
}

std::uint64_t CwsConfig::fingerprint() const noexcept {
  std::uint64_t h = mix64(kCwsDomain);
  h = mix64(h ^ static_cast<std::uint64_t>(k));
  h = mix64(h ^ seed);
  h = mix64(h ^ static_cast<std::uint64_t>(dim));
  return h;
}

CwsSample cws_sample(const SparseVector& v, std::uint64_t seed, std::size_t j) {
  check_vector(v, 0);
  const RandKey key = sample_key(seed, j);
  const auto idx = v.indices();
  const auto val = v.values();
  CwsSample best{idx.front(), 0};
  double best_log_a = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < idx.size(); ++e) {
    const Candidate c = candidate(draws(key.with(idx[e])), std::log(val[e]));
    // Strict comparison: ties go to the lowest index.
    if (c.log_a < best_log_a) {
      best_log_a = c.log_a;
      best = {idx[e], static_cast<std::int64_t>(c.level)};
    }
  }
  return best;
}

CwsSketch cws_sketch(const SparseVector& v, std::size_t k, std::uint64_t seed, unsigned threads) {
  return std::move(cws_sketch_batch(std::span(&v, 1), k, seed, threads).front());
}

std::vector<CwsSketch> cws_sketch_batch(std::span<const SparseVector> vectors, std::size_t k,
                                        std::uint64_t seed, unsigned threads) {
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().dim();
  const CwsConfig cfg{k, seed, dim};
  cfg.validate();
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    if (vectors[n].dim() != dim) {
      throw ValidationError("vector " + std::to_string(n) + " has dimension " +
                            std::to_string(vectors[n].dim()) + ", expected " +
                            std::to_string(dim));
    }
    check_vector(vectors[n], n);
  }

  std::vector<std::vector<std::size_t>> ids(vectors.size(), std::vector<std::size_t>(k));
  if (!vectors.empty()) {
    const detail::BatchLayout layout(vectors);
    const std::size_t groups = layout.coords.size();
    std::vector<double> log_weight;
    log_weight.reserve(layout.entries.size());
    for (const auto& e : layout.entries) log_weight.push_back(std::log(e.value));

    parallel_chunks(k, 64, threads, [&](std::size_t j_begin, std::size_t j_end) {
      std::vector<double> best(vectors.size());
      for (std::size_t j = j_begin; j < j_end; ++j) {
        const RandKey key = sample_key(seed, j);
        std::fill(best.begin(), best.end(), std::numeric_limits<double>::infinity());
        for (std::size_t g = 0; g < groups; ++g) {
          const Draws d = draws(key.with(layout.coords[g]));
          for (std::size_t e = layout.group_start[g]; e < layout.group_start[g + 1]; ++e) {
            const auto vec = layout.entries[e].vec;
            const double log_a = candidate(d, log_weight[e]).log_a;
            // Groups ascend by coordinate, so the first minimum is the lowest index.
            if (log_a < best[vec]) {
              best[vec] = log_a;
              ids[vec][j] = layout.coords[g];
            }
          }
        }
      }
    });
  }

  std::vector<CwsSketch> out;
  out.reserve(vectors.size());
  const std::uint64_t fp = cfg.fingerprint();
  for (auto& s : ids) out.emplace_back(std::move(s), fp);
  return out;
}

std::size_t cws_bucket(std::size_t id, std::size_t buckets) noexcept {
  return static_cast<std::size_t>(mix64(static_cast<std::uint64_t>(id)) % buckets);
}

EncodedFeatures encode_cws(const CwsSketch& s, std::size_t buckets) {
  if (buckets < 2) throw ValidationError("CWS bucket count must be >= 2");
  std::vector<std::size_t> ones(s.k());
  for (std::size_t j = 0; j < s.k(); ++j) ones[j] = j * buckets + cws_bucket(s.ids()[j], buckets);
  return EncodedFeatures(buckets, std::move(ones));
}

}  // namespace stablesketch
