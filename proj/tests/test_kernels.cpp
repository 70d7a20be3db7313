#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "stablesketch/dataset_io.hpp"
#include "stablesketch/errors.hpp"
#include "stablesketch/kernels.hpp"
#include "test_util.hpp"

namespace {

using stablesketch::CollisionCase;
using stablesketch::SparseVector;

SparseVector dense(std::vector<double> x) { return SparseVector::from_dense(x); }

constexpr double kExact = 1e-12;

TEST(Kernels, Rho2Examples) {
  const auto u = dense({1.0, -2.0, 0.5});
  EXPECT_NEAR(stablesketch::rho2(u, u), 1.0, kExact);
  EXPECT_NEAR(stablesketch::rho2(u, u.scaled(-1.0)), -1.0, kExact);
  EXPECT_NEAR(stablesketch::rho2(dense({1, 0}), dense({1, 1})), 1.0 / std::sqrt(2.0), kExact);
  EXPECT_THROW((void)stablesketch::rho2(u, SparseVector(3)), stablesketch::ValidationError);
}

TEST(Kernels, Chi2Examples) {
  const auto u = dense({0.5, 0.5, 0.0});
  EXPECT_NEAR(stablesketch::chi2_kernel(u, u), 1.0, kExact);
  EXPECT_NEAR(stablesketch::chi2_kernel(dense({0.5, 0.5, 0, 0}), dense({0, 0, 0.25, 0.75})), 0.0,
              kExact);
  EXPECT_NEAR(stablesketch::chi2_kernel(u, dense({0.5, 0.0, 0.5})), 0.5, kExact);
  EXPECT_THROW((void)stablesketch::chi2_kernel(dense({1, 1}), dense({0.5, 0.5})),
               stablesketch::ValidationError);
  EXPECT_THROW((void)stablesketch::chi2_kernel(dense({1.5, -0.5}), dense({0.5, 0.5})),
               stablesketch::ValidationError);
}

TEST(Kernels, ResemblanceExamples) {
  const auto u = dense({1, 0, 3, 0});
  EXPECT_NEAR(stablesketch::resemblance(u, u), 1.0, kExact);
  EXPECT_NEAR(stablesketch::resemblance(dense({1, 2, 3}), dense({5, 0.1, 9})), 1.0, kExact);
  EXPECT_NEAR(stablesketch::resemblance(u, dense({2, 0, 0, 4})), 1.0 / 3.0, kExact);
  EXPECT_THROW((void)stablesketch::resemblance(SparseVector(4), SparseVector(4)),
               stablesketch::ValidationError);
}

TEST(Kernels, MinMaxExamples) {
  const auto u = dense({1, 2, 0});
  EXPECT_NEAR(stablesketch::minmax_kernel(u, u), 1.0, kExact);
  EXPECT_NEAR(stablesketch::minmax_kernel(dense({1, 0}), dense({0, 2})), 0.0, kExact);
  EXPECT_NEAR(stablesketch::minmax_kernel(u, dense({2, 1, 1})), 2.0 / 5.0, kExact);
  EXPECT_THROW((void)stablesketch::minmax_kernel(dense({1, -1}), dense({1, 1})),
               stablesketch::ValidationError);
  EXPECT_THROW((void)stablesketch::minmax_kernel(SparseVector(2), SparseVector(2)),
               stablesketch::ValidationError);
}

TEST(Kernels, NormalizedMinMaxExamples) {
  const auto u = dense({0.25, 0.75, 0});
  const auto v = dense({0.5, 0.25, 0.25});
  EXPECT_NEAR(stablesketch::normalized_minmax(u, v), stablesketch::minmax_kernel(u, v), kExact);
  EXPECT_NEAR(stablesketch::normalized_minmax(u, u.scaled(7.0)), 1.0, kExact);
  EXPECT_NEAR(stablesketch::normalized_minmax(dense({1, 1}), dense({3, 1})), 0.6, kExact);
  EXPECT_THROW((void)stablesketch::normalized_minmax(u, SparseVector(3)),
               stablesketch::ValidationError);
}

TEST(Kernels, CollisionLawExamples) {
  const auto u = dense({1, 0});
  EXPECT_NEAR(stablesketch::collision_law(CollisionCase::two, u, u).probability, 1.0, kExact);
  const auto law = stablesketch::collision_law(CollisionCase::two, u, dense({1, 1}));
  EXPECT_NEAR(law.probability, 0.75, kExact);
  EXPECT_FALSE(law.approximate);
  EXPECT_NEAR(stablesketch::collision_law(CollisionCase::zero_plus, dense({1, 0, 3, 0}),
                                          dense({2, 0, 0, 4}))
                  .probability,
              2.0 / 3.0, kExact);
  const auto one = stablesketch::collision_law(CollisionCase::one, dense({0.5, 0.5}),
                                               dense({0.5, 0.5}));
  EXPECT_TRUE(one.approximate);
  EXPECT_NEAR(one.probability, 1.0, kExact);
  EXPECT_THROW((void)stablesketch::collision_law(CollisionCase::zero_plus, dense({-1, 1}),
                                                 dense({1, 1})),
               stablesketch::ValidationError);
}

TEST(Kernels, CollisionCaseForAlpha) {
  EXPECT_EQ(stablesketch::collision_case_for_alpha(2.0), CollisionCase::two);
  EXPECT_EQ(stablesketch::collision_case_for_alpha(1.0), CollisionCase::one);
  EXPECT_EQ(stablesketch::collision_case_for_alpha(0.01), CollisionCase::zero_plus);
  EXPECT_EQ(stablesketch::collision_case_for_alpha(1e-4), CollisionCase::zero_plus);
  for (double a : {0.1, 0.5, 1.5, 1.99}) {
    EXPECT_THROW((void)stablesketch::collision_case_for_alpha(a), stablesketch::NoClosedFormError);
  }
  EXPECT_THROW((void)stablesketch::collision_case_for_alpha(0.0), stablesketch::ValidationError);
}

TEST(Kernels, SymmetryBoundsAndScaling) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto u = testutil::random_vector(2 * t, 20, 0.4, 0.0, 3.0);
    const auto v = testutil::random_vector(2 * t + 1, 20, 0.4, 0.0, 3.0);
    const auto su = stablesketch::l1_normalize(u);
    const auto sv = stablesketch::l1_normalize(v);
    const double c1 = 0.5 + static_cast<double>(t % 7);
    const double c2 = 3.0 / (1.0 + static_cast<double>(t % 5));

    EXPECT_NEAR(stablesketch::rho2(u, v), stablesketch::rho2(v, u), kExact);
    EXPECT_NEAR(stablesketch::rho2(u.scaled(c1), v.scaled(c2)), stablesketch::rho2(u, v), 1e-12);
    EXPECT_NEAR(stablesketch::resemblance(u.scaled(c1), v.scaled(c2)),
                stablesketch::resemblance(u, v), kExact);
    EXPECT_NEAR(stablesketch::normalized_minmax(u.scaled(c1), v.scaled(c2)),
                stablesketch::normalized_minmax(u, v), 1e-12);
    EXPECT_NEAR(stablesketch::minmax_kernel(u.scaled(c1), v.scaled(c1)),
                stablesketch::minmax_kernel(u, v), 1e-12);
    EXPECT_NEAR(stablesketch::minmax_kernel(u, v), stablesketch::minmax_kernel(v, u), kExact);
    EXPECT_NEAR(stablesketch::chi2_kernel(su, sv), stablesketch::chi2_kernel(sv, su), kExact);

    const double chi = stablesketch::chi2_kernel(su, sv);
    EXPECT_GE(chi, 0.0);
    EXPECT_LE(chi, 1.0 + 1e-12);
    EXPECT_LE(stablesketch::minmax_kernel(u, v), 1.0);
    for (auto c : {CollisionCase::two, CollisionCase::one, CollisionCase::zero_plus}) {
      const double p = stablesketch::collision_law(c, su, sv).probability;
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
  }
}

TEST(Kernels, AlphaTwoLawIncreasesWithRho) {
  // v_t = (1, t): rho2 = 1/sqrt(1+t^2) decreases strictly in t >= 0.
  double prev_rho = 2.0;
  double prev_p = 2.0;
  for (int step = 0; step <= 50; ++step) {
    const double t = 0.1 * step;
    const auto u = dense({1.0, 0.0});
    const auto v = dense({1.0, t});
    const double r = stablesketch::rho2(u, v);
    const double p = stablesketch::collision_law(CollisionCase::two, u, v).probability;
    if (step > 0) {
      EXPECT_LT(r, prev_rho);
      EXPECT_LT(p, prev_p);
    }
    prev_rho = r;
    prev_p = p;
  }
}

TEST(Kernels, RejectsDimensionMismatch) {
  EXPECT_THROW((void)stablesketch::minmax_kernel(dense({1, 1}), dense({1, 1, 1})),
               stablesketch::ValidationError);
}

}  // namespace
