#include "stablesketch/verify.hpp"

#include <cmath>
#include <json.hpp>

#include "stablesketch/cws.hpp"
#include "stablesketch/dataset_io.hpp"
#include "stablesketch/errors.hpp"
#include "stablesketch/estimator.hpp"
#include "stablesketch/kernels.hpp"
#include "stablesketch/keyed_rand.hpp"
#include "stablesketch/sign_projection.hpp"

namespace stablesketch {

namespace {

constexpr std::uint64_t kPairDomain = 0x70616972732d6765ULL;
constexpr std::uint64_t kRepeatDomain = 0x7265706561742d73ULL;

constexpr std::size_t kDenseDim = 32;
constexpr std::size_t kSimplexDim = 64;
constexpr std::size_t kSparseDim = 64;
constexpr std::size_t kCwsDim = 32;

enum Family : std::uint64_t { kDense = 1, kSparse = 3, kPartialCopy = 5 };

/// Variate source for one pair: draw(role, i) is uniform on (0,1).
struct PairRng {
  RandKey key;
  double operator()(std::uint64_t role, std::uint64_t i = 0) const {
    return uniform_open(key.with(role).with(i));
  }
};

PairRng pair_rng(std::uint64_t seed, Family family, std::size_t pair) {
  return {RandKey(seed).with(kPairDomain).with(family).with(pair)};
}

/// Guarantees a nonempty vector by planting a value at coordinate `at`.
void ensure_nonzero(std::vector<double>& x, std::size_t at, double value) {
  for (double e : x) {
    if (e != 0.0) return;
  }
  x[at % x.size()] = value;
}

std::uint64_t repeat_seed(std::uint64_t seed, std::size_t r) {
  return RandKey(seed).with(kRepeatDomain).with(r).bits();
}

}  // namespace

double binomial_tolerance(double p, std::size_t samples, double allowance) {
  const double var = std::max(0.0, p * (1.0 - p)) / static_cast<double>(samples);
  return kSigmas * std::sqrt(var) + allowance;
}

std::vector<VectorPair> dense_signed_pairs(std::size_t count, std::size_t dim, std::uint64_t seed) {
  std::vector<VectorPair> out;
  for (std::size_t p = 0; p < count; ++p) {
    const PairRng rng = pair_rng(seed, kDense, p);
    const double c = 2.0 * rng(0) - 1.0;
    std::vector<double> u(dim), v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      u[i] = 2.0 * rng(1, i) - 1.0;
      const double w = 2.0 * rng(2, i) - 1.0;
      v[i] = c * u[i] + (1.0 - std::abs(c)) * w;
    }
    ensure_nonzero(v, 0, 1.0);
    out.push_back({SparseVector::from_dense(u), SparseVector::from_dense(v)});
  }
  return out;
}

std::vector<VectorPair> partial_copy_pairs(std::size_t count, std::size_t dim, double density,
                                           std::uint64_t seed) {
  std::vector<VectorPair> out;
  for (std::size_t p = 0; p < count; ++p) {
    const PairRng rng = pair_rng(seed, kPartialCopy, p);
    const double redraw = rng(0);
    std::vector<double> u(dim), v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      u[i] = rng(1, i) < density ? rng(2, i) : 0.0;
      if (rng(3, i) < redraw) {
        v[i] = rng(4, i) < density ? rng(5, i) : 0.0;
      } else {
        v[i] = u[i];
      }
    }
    ensure_nonzero(u, p, 1.0);
    ensure_nonzero(v, p, 1.0);
    out.push_back({SparseVector::from_dense(u), SparseVector::from_dense(v)});
  }
  return out;
}

std::vector<VectorPair> simplex_pairs(std::size_t count, std::size_t dim, std::uint64_t seed) {
  auto pairs = partial_copy_pairs(count, dim, 0.3, seed);
  for (auto& p : pairs) {
    p.u = l1_normalize(p.u);
    p.v = l1_normalize(p.v);
  }
  return pairs;
}

std::vector<VectorPair> sparse_nonnegative_pairs(std::size_t count, std::size_t dim,
                                                 std::uint64_t seed) {
  std::vector<VectorPair> out;
  for (std::size_t p = 0; p < count; ++p) {
    const PairRng rng = pair_rng(seed, kSparse, p);
    const double shared = rng(0);
    std::vector<double> u(dim, 0.0), v(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (rng(1, i) >= 0.3) continue;  // inactive coordinate
      const double where = rng(2, i);
      if (where < shared) {
        u[i] = rng(3, i);
        v[i] = rng(4, i);
      } else if (where < shared + 0.5 * (1.0 - shared)) {
        u[i] = rng(3, i);
      } else {
        v[i] = rng(4, i);
      }
    }
    ensure_nonzero(u, p, 1.0);
    ensure_nonzero(v, p + 1, 1.0);
    out.push_back({SparseVector::from_dense(u), SparseVector::from_dense(v)});
  }
  return out;
}

std::vector<VectorPair> nonnegative_pairs(std::size_t count, std::size_t dim, std::uint64_t seed) {
  return partial_copy_pairs(count, dim, 0.5, seed);
}

bool VerifyReport::all_passed() const noexcept {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"alphas", options.alphas}, {"cws", options.include_cws},
                 {"trials", options.trials}, {"k", options.k},
                 {"seed", options.seed},     {"repeats", options.repeats}};
  auto& rows = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json row;
    row["method"] = c.method;
    row["alpha"] = c.alpha ? nlohmann::ordered_json(*c.alpha) : nlohmann::ordered_json(nullptr);
    row["law"] = c.law;
    row["pair"] = c.pair;
    row["theoretical"] = c.theoretical;
    row["empirical"] = c.empirical;
    row["k"] = c.k;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  j["passed"] = all_passed();
  return j.dump(2) + "\n";
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.k < 1000) throw ValidationError("verify needs k >= 1000");
  if (options.trials == 0) throw ValidationError("verify needs at least one trial");
  if (options.repeats == 0) throw ValidationError("verify needs repeats >= 1");
  std::vector<CollisionCase> laws;
  for (double a : options.alphas) laws.push_back(collision_case_for_alpha(a));

  VerifyReport report{options, {}};
  const std::size_t samples = options.k * options.repeats;

  auto record = [&](VerifyCase c, double allowance) {
    c.k = options.k;
    c.tolerance = binomial_tolerance(c.theoretical, samples, allowance);
    c.pass = std::abs(c.theoretical - c.empirical) <= c.tolerance;
    report.cases.push_back(std::move(c));
  };

  for (std::size_t n = 0; n < laws.size(); ++n) {
    const double alpha = options.alphas[n];
    std::vector<VectorPair> pairs;
    std::string law_name;
    double allowance = 0.0;
    switch (laws[n]) {
      case CollisionCase::two:
        pairs = dense_signed_pairs(options.trials, kDenseDim, options.seed);
        law_name = "rho2";
        break;
      case CollisionCase::one:
        pairs = simplex_pairs(options.trials, kSimplexDim, options.seed);
        law_name = "chi2";
        allowance = kChi2Allowance;
        break;
      case CollisionCase::zero_plus:
        pairs = sparse_nonnegative_pairs(options.trials, kSparseDim, options.seed);
        law_name = "resemblance";
        allowance = kZeroPlusAllowance;
        break;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const SparseVector batch[] = {pairs[p].u, pairs[p].v};
      double sum = 0.0;
      for (std::size_t r = 0; r < options.repeats; ++r) {
        const SketchConfig cfg{alpha, options.k, repeat_seed(options.seed, r), pairs[p].u.dim()};
        const auto s = project_sign_batch(batch, cfg, options.threads);
        sum += collision_fraction(s[0], s[1]);
      }
      record({"sign", alpha, law_name, p,
              collision_law(laws[n], pairs[p].u, pairs[p].v).probability,
              sum / static_cast<double>(options.repeats)},
             allowance);
    }
  }

  if (options.include_cws) {
    const auto pairs = nonnegative_pairs(options.trials, kCwsDim, options.seed);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const SparseVector batch[] = {pairs[p].u, pairs[p].v};
      double sum = 0.0;
      for (std::size_t r = 0; r < options.repeats; ++r) {
        const auto s = cws_sketch_batch(batch, options.k, repeat_seed(options.seed, r),
                                        options.threads);
        sum += collision_fraction(s[0], s[1]);
      }
      record({"cws", std::nullopt, "minmax", p, minmax_kernel(pairs[p].u, pairs[p].v),
              sum / static_cast<double>(options.repeats)},
             kCwsAllowance);
    }
  }
  return report;
}

}  // namespace stablesketch
