#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "stablesketch/encoded.hpp"
#include "stablesketch/sparse_vector.hpp"

namespace stablesketch {

struct LabeledExample {
  long label = 0;
  SparseVector vector;
  std::size_t line = 0;  // 1-based source line, 0 when not parsed from text
};

struct LabeledDataset {
  std::vector<LabeledExample> examples;
  std::size_t dim = 0;

  [[nodiscard]] std::vector<SparseVector> vectors() const;
};

/**
 * Parses "label idx:val idx:val ..." lines with 1-based, strictly ascending
 * indices. Labels are integers (a leading '+' is allowed). LF and CRLF line
 * endings are accepted and blank lines are skipped. The dataset dimension is
 * `dim` when given (an index beyond it is an error), otherwise the largest
 * index seen. Throws ParseError naming the line.
 */
[[nodiscard]] LabeledDataset parse_dataset(std::istream& in,
                                           std::optional<std::size_t> dim = std::nullopt);
[[nodiscard]] LabeledDataset read_dataset(const std::filesystem::path& path,
                                          std::optional<std::size_t> dim = std::nullopt);

/// v / sum(v). Throws ValidationError on a negative entry or a zero vector.
[[nodiscard]] SparseVector l1_normalize(const SparseVector& v);

struct LabeledFeatures {
  long label = 0;
  EncodedFeatures features;
};

/// One line per example, 1-based positions with value 1. Throws
/// ValidationError for mixed feature lengths and Error on stream failure.
void write_features(std::span<const LabeledFeatures> rows, std::ostream& out);

/// Real-valued rows with 17 significant digits, so parsing reproduces the values.
void write_dataset(const LabeledDataset& data, std::ostream& out);

}  // namespace stablesketch
