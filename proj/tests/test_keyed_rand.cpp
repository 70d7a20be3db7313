#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "stablesketch/keyed_rand.hpp"

namespace {

using stablesketch::RandKey;

constexpr std::size_t kSamples = 1000000;

std::vector<double> uniforms(std::uint64_t seed, std::size_t n) {
  std::vector<double> out(n);
  const RandKey root(seed);
  for (std::size_t m = 0; m < n; ++m) out[m] = stablesketch::uniform(root.with(m));
  return out;
}

TEST(KeyedRand, SameKeySameVariate) {
  const RandKey key = RandKey(42).with(7).with(3);
  EXPECT_EQ(key.bits(), RandKey(42).with(7).with(3).bits());
  EXPECT_EQ(stablesketch::uniform(key), stablesketch::uniform(key));
  EXPECT_EQ(stablesketch::gamma2(key), stablesketch::gamma2(key));
}

TEST(KeyedRand, LabelOrderMatters) {
  EXPECT_NE(RandKey(1).with(2).with(3).bits(), RandKey(1).with(3).with(2).bits());
  EXPECT_NE(RandKey(1).with(0).bits(), RandKey(1).bits());
  EXPECT_NE(RandKey(1).with(5).bits(), RandKey(2).with(5).bits());
}

TEST(KeyedRand, EvaluationOrderIndependent) {
  std::vector<std::size_t> order(1000);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  std::rotate(order.begin(), order.begin() + 317, order.end());
  const auto forward = uniforms(9, 1000);
  std::vector<double> permuted(1000);
  for (std::size_t m : order) permuted[m] = stablesketch::uniform(RandKey(9).with(m));
  EXPECT_EQ(forward, permuted);
}

TEST(KeyedRand, ConcurrentEvaluationMatchesSerial) {
  const auto serial = uniforms(11, 40000);
  std::vector<double> parallel(serial.size());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t m = t; m < parallel.size(); m += 4) {
        parallel[m] = stablesketch::uniform(RandKey(11).with(m));
      }
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(serial, parallel);
}

TEST(KeyedRand, UniformRangeMeanAndKolmogorovSmirnov) {
  auto u = uniforms(2024, kSamples);
  double sum = 0.0;
  for (double x : u) {
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    sum += x;
  }
  EXPECT_NEAR(sum / kSamples, 0.5, 0.002);

  std::sort(u.begin(), u.end());
  double ks = 0.0;
  for (std::size_t m = 0; m < u.size(); ++m) {
    const double lo = static_cast<double>(m) / kSamples;
    const double hi = static_cast<double>(m + 1) / kSamples;
    ks = std::max({ks, u[m] - lo, hi - u[m]});
  }
  EXPECT_LT(ks, 0.002);
}

TEST(KeyedRand, UniformOpenExcludesEndpoints) {
  for (std::size_t m = 0; m < 10000; ++m) {
    const double x = stablesketch::uniform_open(RandKey(3).with(m));
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(KeyedRand, ExponentialMoments) {
  EXPECT_EQ(stablesketch::exponential_transform(0.0), 0.0);
  double sum = 0.0;
  double sq = 0.0;
  for (std::size_t m = 0; m < kSamples; ++m) {
    const double x = stablesketch::exponential(RandKey(5).with(m));
    ASSERT_GE(x, 0.0);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / kSamples;
  EXPECT_NEAR(mean, 1.0, 0.005);
  EXPECT_NEAR(sq / kSamples - mean * mean, 1.0, 0.02);
}

TEST(KeyedRand, Gamma2IsSumOfSubstreamExponentials) {
  const RandKey key = RandKey(8).with(1);
  EXPECT_EQ(stablesketch::gamma2(key),
            stablesketch::exponential(key.with(0)) + stablesketch::exponential(key.with(1)));
  // Both exponentials at their boundary value 0 sum to 0.
  EXPECT_EQ(stablesketch::exponential_transform(0.0) + stablesketch::exponential_transform(0.0), 0.0);
}

TEST(KeyedRand, Gamma2Moments) {
  double sum = 0.0;
  double sq = 0.0;
  for (std::size_t m = 0; m < kSamples; ++m) {
    const double x = stablesketch::gamma2(RandKey(6).with(m));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / kSamples;
  EXPECT_NEAR(mean, 2.0, 0.01);
  EXPECT_NEAR(sq / kSamples - mean * mean, 2.0, 0.05);
}

}  // namespace
