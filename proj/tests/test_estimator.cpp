#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "stablesketch/errors.hpp"
#include "stablesketch/estimator.hpp"
#include "stablesketch/kernels.hpp"
#include "stablesketch/verify.hpp"
#include "test_util.hpp"

namespace {

using stablesketch::SketchConfig;
using stablesketch::SparseVector;

double min_eigenvalue(const stablesketch::KernelMatrix& m) {
  Eigen::MatrixXd a(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) a(i, j) = m(i, j);
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().minCoeff();
}

TEST(Estimator, SelfCollisionIsOne) {
  const auto v = testutil::random_vector(1, 30, 0.5, -1, 1);
  const auto s = stablesketch::project_sign(v, SketchConfig{1.0, 333, 1, 30});
  EXPECT_EQ(stablesketch::collision_fraction(s, s), 1.0);
  const auto c = stablesketch::cws_sketch(testutil::random_vector(1, 30, 0.5, 0, 1), 333, 1);
  EXPECT_EQ(stablesketch::collision_fraction(c, c), 1.0);
}

TEST(Estimator, NegatedVectorNeverCollidesAtAlphaTwo) {
  const auto v = testutil::random_vector(2, 30, 0.9, -1, 1);
  const SketchConfig cfg{2.0, 4096, 2, 30};
  EXPECT_EQ(stablesketch::collision_fraction(stablesketch::project_sign(v, cfg),
                                             stablesketch::project_sign(v.scaled(-1.0), cfg)),
            0.0);
}

TEST(Estimator, RejectsMismatchedConfigs) {
  const auto v = testutil::random_vector(3, 30, 0.5, -1, 1);
  const auto a = stablesketch::project_sign(v, SketchConfig{1.0, 64, 1, 30});
  const auto b = stablesketch::project_sign(v, SketchConfig{1.0, 64, 2, 30});
  const auto c = stablesketch::project_sign(v, SketchConfig{1.0, 65, 1, 30});
  EXPECT_THROW((void)stablesketch::collision_fraction(a, b), stablesketch::ConfigMismatchError);
  EXPECT_THROW((void)stablesketch::collision_fraction(a, c), stablesketch::ConfigMismatchError);
  const std::vector<stablesketch::SignSketch> mixed{a, b};
  EXPECT_THROW((void)stablesketch::kernel_matrix(mixed), stablesketch::ConfigMismatchError);

  const auto w = testutil::random_vector(3, 30, 0.5, 0, 1);
  const auto x = stablesketch::cws_sketch(w, 64, 1);
  const auto y = stablesketch::cws_sketch(w, 64, 2);
  EXPECT_THROW((void)stablesketch::collision_fraction(x, y), stablesketch::ConfigMismatchError);
}

TEST(Estimator, AlphaTwoPairMatchesLaw) {
  const auto pairs = stablesketch::dense_signed_pairs(1, 32, 99);
  const auto& [u, v] = pairs.front();
  const SparseVector batch[] = {u, v};
  const auto s = stablesketch::project_sign_batch(batch, SketchConfig{2.0, 100000, 4, 32});
  const double p =
      stablesketch::collision_law(stablesketch::CollisionCase::two, u, v).probability;
  EXPECT_NEAR(stablesketch::collision_fraction(s[0], s[1]), p,
              stablesketch::binomial_tolerance(p, 100000));
}

TEST(KernelMatrix, SingleAndDuplicated) {
  const auto v = testutil::random_vector(4, 20, 0.5, -1, 1);
  const SketchConfig cfg{0.5, 256, 1, 20};
  const auto s = stablesketch::project_sign(v, cfg);
  const std::vector<stablesketch::SignSketch> one{s};
  const auto m1 = stablesketch::kernel_matrix(one);
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1(0, 0), 1.0);

  const std::vector<stablesketch::SignSketch> dup{s, s, s};
  const auto m3 = stablesketch::kernel_matrix(dup);
  for (double x : m3.data()) EXPECT_EQ(x, 1.0);
}

TEST(KernelMatrix, SymmetricUnitDiagonalPsd) {
  std::vector<SparseVector> vs;
  for (std::uint64_t t = 0; t < 25; ++t) vs.push_back(testutil::random_vector(t, 40, 0.3, 0, 1));
  const auto sign = stablesketch::project_sign_batch(vs, SketchConfig{1.0, 2000, 7, 40});
  const auto cws = stablesketch::cws_sketch_batch(vs, 2000, 7);
  for (const auto& m : {stablesketch::kernel_matrix(sign, 1), stablesketch::kernel_matrix(cws, 3)}) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_EQ(m(i, i), 1.0);
      for (std::size_t j = 0; j < m.size(); ++j) {
        EXPECT_EQ(m(i, j), m(j, i));
        EXPECT_GE(m(i, j), 0.0);
        EXPECT_LE(m(i, j), 1.0);
      }
    }
    EXPECT_GE(min_eigenvalue(m), -1e-8);
  }
  EXPECT_EQ(stablesketch::kernel_matrix(sign, 1).data()[3],
            stablesketch::kernel_matrix(sign, 8).data()[3]);
}

TEST(KernelMatrix, MatchesCollisionLawsAtLargeK) {
  std::vector<SparseVector> vs;
  for (const auto& p : stablesketch::dense_signed_pairs(3, 32, 5)) {
    vs.push_back(p.u);
    vs.push_back(p.v);
  }
  vs.resize(5);
  constexpr std::size_t k = 100000;
  const auto s = stablesketch::project_sign_batch(vs, SketchConfig{2.0, k, 12, 32});
  const auto m = stablesketch::kernel_matrix(s);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double p =
          stablesketch::collision_law(stablesketch::CollisionCase::two, vs[i], vs[j]).probability;
      EXPECT_NEAR(m(i, j), p, stablesketch::binomial_tolerance(p, k)) << i << "," << j;
    }
  }
}

}  // namespace
