#pragma once

#include <optional>
#include <string_view>

#include "stablesketch/sparse_vector.hpp"

namespace stablesketch {

// Exact similarity measures. All take vectors of equal dimension and throw
// ValidationError on a dimension mismatch or a violated precondition.

/// Correlation sum u_i v_i / (|u|_2 |v|_2), clamped to [-1, 1].
[[nodiscard]] double rho2(const SparseVector& u, const SparseVector& v);

/// Chi-square kernel sum 2 u_i v_i / (u_i + v_i). Inputs must be nonnegative
/// and sum to 1 within kL1Tolerance; normalization is never applied implicitly.
[[nodiscard]] double chi2_kernel(const SparseVector& u, const SparseVector& v);

/// |supp u ∩ supp v| / |supp u ∪ supp v| for nonnegative inputs.
[[nodiscard]] double resemblance(const SparseVector& u, const SparseVector& v);

/// sum min(u_i, v_i) / sum max(u_i, v_i) for nonnegative inputs, not both zero.
[[nodiscard]] double minmax_kernel(const SparseVector& u, const SparseVector& v);

/// minmax_kernel of the l1-normalized inputs.
[[nodiscard]] double normalized_minmax(const SparseVector& u, const SparseVector& v);

inline constexpr double kL1Tolerance = 1e-9;

/// The alpha regimes with a closed-form sign collision law.
enum class CollisionCase { two, one, zero_plus };

[[nodiscard]] std::string_view to_string(CollisionCase c) noexcept;

/// The regime for a projection alpha: 2, 1, or anything at or below the
/// 0+ surrogate. Throws NoClosedFormError for every other alpha.
[[nodiscard]] CollisionCase collision_case_for_alpha(double alpha);

struct CollisionLaw {
  double probability = 0.0;
  /// Set for the alpha = 1 law, which holds only approximately.
  bool approximate = false;
};

/**
 * Pr(sign x_j = sign y_j):
 *   two:       1 - arccos(rho2) / pi
 *   one:       1 - arccos(chi2_kernel) / pi   (approximate; l1-normalized nonnegative data)
 *   zero_plus: 1/2 + resemblance / 2          (nonnegative data)
 */
[[nodiscard]] CollisionLaw collision_law(CollisionCase which, const SparseVector& u,
                                         const SparseVector& v);

}  // namespace stablesketch
