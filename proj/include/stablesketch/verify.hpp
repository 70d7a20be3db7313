#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stablesketch/sparse_vector.hpp"

namespace stablesketch {

// Tolerance policy for comparing empirical collision fractions with the
// closed-form laws: kSigmas binomial standard deviations plus a fixed
// allowance for laws that are approximate or use a surrogate.
inline constexpr double kSigmas = 4.0;
inline constexpr double kChi2Allowance = 0.015;
inline constexpr double kZeroPlusAllowance = 0.01;
inline constexpr double kCwsAllowance = 0.01;

/// kSigmas * sqrt(p (1 - p) / samples) + allowance.
[[nodiscard]] double binomial_tolerance(double p, std::size_t samples, double allowance = 0.0);

struct VectorPair {
  SparseVector u;
  SparseVector v;
};

// Deterministic random pair families; each is a pure function of its arguments.

/// Dense signed pairs v = c u + (1 - |c|) w, entries uniform on (-1, 1); spans rho2 in [-1, 1].
[[nodiscard]] std::vector<VectorPair> dense_signed_pairs(std::size_t count, std::size_t dim,
                                                         std::uint64_t seed);
/**
 * Partial copies: u has each coordinate nonzero with probability `density`
 * (values uniform on (0,1)); v equals u except that every coordinate is
 * redrawn the same way with a per-pair probability, so similarity spans the
 * whole range from unrelated to identical.
 */
[[nodiscard]] std::vector<VectorPair> partial_copy_pairs(std::size_t count, std::size_t dim,
                                                         double density, std::uint64_t seed);
/// l1-normalized partial copies at density 0.3 (inputs of the chi2 law).
[[nodiscard]] std::vector<VectorPair> simplex_pairs(std::size_t count, std::size_t dim,
                                                    std::uint64_t seed);
/// Sparse nonnegative pairs whose support overlap varies from pair to pair.
[[nodiscard]] std::vector<VectorPair> sparse_nonnegative_pairs(std::size_t count, std::size_t dim,
                                                               std::uint64_t seed);
/// Partial copies at density 0.5 (inputs of the min-max law).
[[nodiscard]] std::vector<VectorPair> nonnegative_pairs(std::size_t count, std::size_t dim,
                                                        std::uint64_t seed);

struct VerifyOptions {
  std::vector<double> alphas{2.0, 1.0, 0.01};
  bool include_cws = true;
  std::size_t trials = 20;
  std::size_t k = 100000;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;
  unsigned threads = 1;
};

struct VerifyCase {
  std::string method;          // "sign" or "cws"
  std::optional<double> alpha; // empty for cws
  std::string law;             // rho2, chi2, resemblance, minmax
  std::size_t pair = 0;
  double theoretical = 0.0;
  double empirical = 0.0;
  std::size_t k = 0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyCase> cases;

  [[nodiscard]] bool all_passed() const noexcept;
  [[nodiscard]] std::string to_json() const;
};

/**
 * Sketches random pairs and compares collision fractions with the laws:
 * alpha = 2 on dense signed pairs, alpha = 1 on l1-normalized nonnegative
 * pairs, alpha <= 0.01 on sparse nonnegative pairs, and 0-bit CWS against the
 * min-max kernel. With repeats > 1 each case averages that many independently
 * seeded sketches. Throws ValidationError for k < 1000, and NoClosedFormError
 * for an alpha without a known law.
 */
[[nodiscard]] VerifyReport run_verify(const VerifyOptions& options);

}  // namespace stablesketch
