#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "stablesketch/cws.hpp"
#include "stablesketch/verify.hpp"

namespace stablesketch {

enum class Method { sign, cws };

/// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

/// Parsed --alpha value. The literal "0+" maps to kAlphaZeroPlus.
struct AlphaArg {
  double value = 2.0;
  bool zero_plus = false;

  [[nodiscard]] std::string describe() const;
};

/// Throws ValidationError for text that is neither "0+" nor a number in (0,2].
[[nodiscard]] AlphaArg parse_alpha(std::string_view text);
[[nodiscard]] Method parse_method(std::string_view text);

struct SketchOptions {
  std::filesystem::path input;
  std::filesystem::path output;
  Method method = Method::sign;
  AlphaArg alpha;
  std::size_t k = 1024;
  std::uint64_t seed = 1;
  std::size_t buckets = kDefaultBuckets;
  std::optional<std::size_t> dim;
  bool normalize = false;
  unsigned threads = 1;
};

/// Sketches every example and writes the encoded features with the original
/// labels. A one-line configuration summary goes to `log`.
void cmd_sketch(const SketchOptions& options, std::ostream& log);

/// Writes the n x n collision-fraction matrix as CSV.
void cmd_kernel(const SketchOptions& options, std::ostream& log);

/// Runs run_verify, writes the JSON report when `report` is set and a summary
/// to `log`. Returns kExitOk or kExitVerification.
int cmd_verify(const VerifyOptions& options, const std::optional<std::filesystem::path>& report,
               std::ostream& log);

struct BenchOptions {
  std::size_t dim = 100000;
  std::size_t nnz = 100;
  std::size_t k = 1024;
  AlphaArg alpha;
  std::size_t vectors = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct BenchResult {
  double seconds = 0.0;
  double projections_per_second = 0.0;
};

[[nodiscard]] BenchResult run_bench(const BenchOptions& options);
void cmd_bench(const BenchOptions& options, std::ostream& log);

/// Shortest round-trip decimal, with ".0" appended to integral values.
[[nodiscard]] std::string format_real(double x);

}  // namespace stablesketch
