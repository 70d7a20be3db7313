#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stablesketch/sparse_vector.hpp"

namespace stablesketch::detail {

/// Nonzeros of a batch of vectors grouped by coordinate. Within a group,
/// entries are in vector order; per vector, entries appear in ascending index.
struct BatchLayout {
  struct Entry {
    std::uint32_t vec;
    double value;
  };
  std::vector<std::size_t> coords;       // distinct coordinates, ascending
  std::vector<std::size_t> group_start;  // coords.size() + 1 offsets into entries
  std::vector<Entry> entries;

  explicit BatchLayout(std::span<const SparseVector> vectors) {
    struct Flat {
      std::size_t coord;
      std::uint32_t vec;
      double value;
    };
    std::vector<Flat> flat;
    std::size_t total = 0;
    for (const auto& v : vectors) total += v.nnz();
    flat.reserve(total);
    for (std::size_t n = 0; n < vectors.size(); ++n) {
      const auto idx = vectors[n].indices();
      const auto val = vectors[n].values();
      for (std::size_t e = 0; e < idx.size(); ++e) {
        flat.push_back({idx[e], static_cast<std::uint32_t>(n), val[e]});
      }
    }
    std::stable_sort(flat.begin(), flat.end(),
                     [](const Flat& a, const Flat& b) { return a.coord < b.coord; });
    entries.reserve(flat.size());
    for (std::size_t e = 0; e < flat.size(); ++e) {
      if (e == 0 || flat[e].coord != flat[e - 1].coord) {
        coords.push_back(flat[e].coord);
        group_start.push_back(e);
      }
      entries.push_back({flat[e].vec, flat[e].value});
    }
    group_start.push_back(flat.size());
  }
};

}  // namespace stablesketch::detail
