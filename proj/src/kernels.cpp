#include "stablesketch/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stablesketch/errors.hpp"
#include "stablesketch/stable.hpp"

namespace stablesketch {

namespace {

void require_same_dim(const SparseVector& u, const SparseVector& v) {
  if (u.dim() != v.dim()) {
    throw ValidationError("kernel inputs have dimensions " + std::to_string(u.dim()) + " and " +
                          std::to_string(v.dim()));
  }
}

void require_nonnegative(const SparseVector& u, const SparseVector& v, const char* what) {
  if (!u.nonnegative() || !v.nonnegative()) {
    throw ValidationError(std::string(what) + " requires nonnegative inputs");
  }
}

/// Walks the union of supports in ascending index order, calling
/// fn(a, b) with the two values (0 where absent).
template <class Fn>
void merge_walk(const SparseVector& u, const SparseVector& v, Fn&& fn) {
  const auto ui = u.indices();
  const auto uv = u.values();
  const auto vi = v.indices();
  const auto vv = v.values();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < ui.size() || b < vi.size()) {
    if (b == vi.size() || (a < ui.size() && ui[a] < vi[b])) {
      fn(uv[a++], 0.0);
    } else if (a == ui.size() || vi[b] < ui[a]) {
      fn(0.0, vv[b++]);
    } else {
      fn(uv[a++], vv[b++]);
    }
  }
}

double minmax_scaled(const SparseVector& u, const SparseVector& v, double su, double sv) {
  double num = 0.0;
  double den = 0.0;
  merge_walk(u, v, [&](double a, double b) {
    a /= su;
    b /= sv;
    num += std::min(a, b);
    den += std::max(a, b);
  });
  if (!(den > 0.0)) throw ValidationError("min-max kernel: both inputs are zero");
  return num / den;
}

}  // namespace

double rho2(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v);
  double uv = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  merge_walk(u, v, [&](double a, double b) {
    uv += a * b;
    uu += a * a;
    vv += b * b;
  });
  if (!(uu > 0.0) || !(vv > 0.0)) throw ValidationError("rho2: zero-norm input");
  return std::clamp(uv / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

double chi2_kernel(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v);
  require_nonnegative(u, v, "chi2 kernel");
  if (std::abs(u.sum() - 1.0) > kL1Tolerance || std::abs(v.sum() - 1.0) > kL1Tolerance) {
    throw ValidationError("chi2 kernel requires l1-normalized inputs (sum 1); normalize first");
  }
  double k = 0.0;
  merge_walk(u, v, [&](double a, double b) {
    if (a + b > 0.0) k += 2.0 * a * b / (a + b);
  });
  return k;
}

double resemblance(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v);
  require_nonnegative(u, v, "resemblance");
  std::size_t both = 0;
  std::size_t either = 0;
  merge_walk(u, v, [&](double a, double b) {
    both += (a > 0.0 && b > 0.0);
    either += (a > 0.0 || b > 0.0);
  });
  if (either == 0) throw ValidationError("resemblance: both inputs are zero");
  return static_cast<double>(both) / static_cast<double>(either);
}

double minmax_kernel(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v);
  require_nonnegative(u, v, "min-max kernel");
  return minmax_scaled(u, v, 1.0, 1.0);
}

double normalized_minmax(const SparseVector& u, const SparseVector& v) {
  require_same_dim(u, v);
  require_nonnegative(u, v, "normalized min-max kernel");
  const double su = u.sum();
  const double sv = v.sum();
  if (!(su > 0.0) || !(sv > 0.0)) throw ValidationError("normalized min-max: zero-sum input");
  return minmax_scaled(u, v, su, sv);
}

std::string_view to_string(CollisionCase c) noexcept {
  switch (c) {
    case CollisionCase::two: return "two";
    case CollisionCase::one: return "one";
    case CollisionCase::zero_plus: return "zero_plus";
  }
  return "?";
}

CollisionCase collision_case_for_alpha(double alpha) {
  require_alpha(alpha);
  alpha = snap_alpha(alpha);
  if (alpha == 2.0) return CollisionCase::two;
  if (alpha == 1.0) return CollisionCase::one;
  if (alpha <= kAlphaZeroPlus) return CollisionCase::zero_plus;
  throw NoClosedFormError("no known closed-form collision probability for alpha = " +
                          std::to_string(alpha) + " (only 2, 1 and 0+)");
}

CollisionLaw collision_law(CollisionCase which, const SparseVector& u, const SparseVector& v) {
  switch (which) {
    case CollisionCase::two:
      return {1.0 - std::acos(rho2(u, v)) / std::numbers::pi, false};
    case CollisionCase::one:
      return {1.0 - std::acos(std::clamp(chi2_kernel(u, v), -1.0, 1.0)) / std::numbers::pi, true};
    case CollisionCase::zero_plus:
      return {0.5 + 0.5 * resemblance(u, v), false};
  }
  throw NoClosedFormError("unknown collision case");
}

}  // namespace stablesketch
