#include "stablesketch/estimator.hpp"

#include <bit>

#include "stablesketch/errors.hpp"
#include "stablesketch/parallel.hpp"

namespace stablesketch {

namespace {

template <class Sketch>
void require_comparable(const Sketch& a, const Sketch& b) {
  if (a.fingerprint() != b.fingerprint() || a.k() != b.k()) {
    throw ConfigMismatchError("sketches were produced under different configurations");
  }
}

template <class Sketch>
KernelMatrix pairwise(std::span<const Sketch> sketches, std::string kind, unsigned threads) {
  for (const auto& s : sketches) require_comparable(sketches.front(), s);
  const std::size_t n = sketches.size();
  KernelMatrix m(n, std::move(kind));
  parallel_chunks(n, 1, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      m(i, i) = 1.0;
      for (std::size_t j = 0; j < i; ++j) m(i, j) = collision_fraction(sketches[i], sketches[j]);
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i);
  }
  return m;
}

}  // namespace

std::size_t agreement_count(const SignSketch& a, const SignSketch& b) {
  require_comparable(a, b);
  std::size_t differ = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) differ += std::popcount(wa[w] ^ wb[w]);
  return a.k() - differ;
}

std::size_t agreement_count(const CwsSketch& a, const CwsSketch& b) {
  require_comparable(a, b);
  std::size_t same = 0;
  for (std::size_t j = 0; j < a.k(); ++j) same += a.ids()[j] == b.ids()[j];
  return same;
}

double collision_fraction(const SignSketch& a, const SignSketch& b) {
  return static_cast<double>(agreement_count(a, b)) / static_cast<double>(a.k());
}

double collision_fraction(const CwsSketch& a, const CwsSketch& b) {
  return static_cast<double>(agreement_count(a, b)) / static_cast<double>(a.k());
}

KernelMatrix kernel_matrix(std::span<const SignSketch> sketches, unsigned threads) {
  return pairwise(sketches, "sign", threads);
}

KernelMatrix kernel_matrix(std::span<const CwsSketch> sketches, unsigned threads) {
  return pairwise(sketches, "cws", threads);
}

}  // namespace stablesketch
