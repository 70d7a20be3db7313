#include "stablesketch/commands.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <vector>

#include "stablesketch/dataset_io.hpp"
#include "stablesketch/errors.hpp"
#include "stablesketch/estimator.hpp"
#include "stablesketch/keyed_rand.hpp"
#include "stablesketch/sign_projection.hpp"
#include "stablesketch/stable.hpp"

namespace stablesketch {

namespace {

constexpr std::uint64_t kBenchDomain = 0x62656e63682d6461ULL;

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open output '" + path.string() + "'");
  return out;
}

/// Loads the dataset and applies the per-method checks, naming the source line.
LabeledDataset load(const SketchOptions& o) {
  if (o.k == 0) throw ValidationError("k must be >= 1");
  if (o.method == Method::cws && o.buckets < 2) throw ValidationError("buckets must be >= 2");
  LabeledDataset data = read_dataset(o.input, o.dim);
  for (auto& e : data.examples) {
    if (o.method == Method::cws || o.normalize) {
      if (!e.vector.nonnegative()) {
        throw ParseError(e.line, o.method == Method::cws
                                     ? "negative value; cws requires nonnegative data"
                                     : "negative value; --normalize requires nonnegative data");
      }
    }
    if (e.vector.empty()) throw ParseError(e.line, "example has no nonzero feature");
    if (o.normalize) e.vector = l1_normalize(e.vector);
  }
  return data;
}

void log_summary(const SketchOptions& o, const LabeledDataset& data, std::ostream& log) {
  log << "examples=" << data.examples.size() << " D=" << data.dim << " k=" << o.k;
  if (o.method == Method::sign) {
    log << " method=sign alpha=" << o.alpha.describe();
  } else {
    log << " method=cws buckets=" << o.buckets;
  }
  log << " seed=" << o.seed << (o.normalize ? " normalize=l1" : "") << '\n';
}

}  // namespace

std::string AlphaArg::describe() const {
  if (zero_plus) return "0+ (surrogate " + format_real(value) + ")";
  return format_real(value);
}

AlphaArg parse_alpha(std::string_view text) {
  if (text == "0+") return {kAlphaZeroPlus, true};
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError("alpha '" + std::string(text) + "' is not a number or \"0+\"");
  }
  require_alpha(value);
  return {value, false};
}

Method parse_method(std::string_view text) {
  if (text == "sign") return Method::sign;
  if (text == "cws") return Method::cws;
  throw ValidationError("unknown method '" + std::string(text) + "' (sign or cws)");
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void cmd_sketch(const SketchOptions& o, std::ostream& log) {
  const LabeledDataset data = load(o);
  const auto vectors = data.vectors();
  std::vector<LabeledFeatures> rows;
  rows.reserve(vectors.size());
  if (o.method == Method::sign) {
    const SketchConfig cfg{o.alpha.value, o.k, o.seed, data.dim};
    const auto sketches = project_sign_batch(vectors, cfg, o.threads);
    for (std::size_t n = 0; n < sketches.size(); ++n) {
      rows.push_back({data.examples[n].label, encode_sign(sketches[n])});
    }
  } else {
    const auto sketches = cws_sketch_batch(vectors, o.k, o.seed, o.threads);
    for (std::size_t n = 0; n < sketches.size(); ++n) {
      rows.push_back({data.examples[n].label, encode_cws(sketches[n], o.buckets)});
    }
  }
  auto out = open_output(o.output);
  write_features(rows, out);
  log_summary(o, data, log);
}

void cmd_kernel(const SketchOptions& o, std::ostream& log) {
  const LabeledDataset data = load(o);
  const auto vectors = data.vectors();
  KernelMatrix m;
  if (o.method == Method::sign) {
    const SketchConfig cfg{o.alpha.value, o.k, o.seed, data.dim};
    m = kernel_matrix(project_sign_batch(vectors, cfg, o.threads), o.threads);
  } else {
    m = kernel_matrix(cws_sketch_batch(vectors, o.k, o.seed, o.threads), o.threads);
  }
  auto out = open_output(o.output);
  std::string line;
  for (std::size_t i = 0; i < m.size(); ++i) {
    line.clear();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) line += ',';
      line += format_real(m(i, j));
    }
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) throw Error("write failure on '" + o.output.string() + "'");
  log_summary(o, data, log);
}

int cmd_verify(const VerifyOptions& options, const std::optional<std::filesystem::path>& report,
               std::ostream& log) {
  const VerifyReport r = run_verify(options);
  if (report) {
    auto out = open_output(*report);
    out << r.to_json();
    if (!out) throw Error("write failure on '" + report->string() + "'");
  }
  std::size_t failed = 0;
  for (const auto& c : r.cases) {
    if (c.pass) continue;
    ++failed;
    log << "FAIL " << c.method;
    if (c.alpha) log << " alpha=" << format_real(*c.alpha);
    log << " law=" << c.law << " pair=" << c.pair << " theoretical=" << c.theoretical
        << " empirical=" << c.empirical << " tolerance=" << c.tolerance << '\n';
  }
  log << (r.cases.size() - failed) << "/" << r.cases.size() << " cases passed (k=" << options.k
      << ", repeats=" << options.repeats << ")\n";
  return failed == 0 ? kExitOk : kExitVerification;
}

BenchResult run_bench(const BenchOptions& o) {
  if (o.vectors == 0 || o.dim == 0 || o.nnz == 0 || o.k == 0) {
    throw ValidationError("bench sizes (dim, nnz, k, vectors) must be positive");
  }
  if (o.nnz > o.dim) throw ValidationError("bench nnz cannot exceed dim");
  // Each vector takes nnz coordinates spaced evenly from a random offset.
  const RandKey root = RandKey(o.seed).with(kBenchDomain);
  std::vector<SparseVector> vectors;
  vectors.reserve(o.vectors);
  const std::size_t stride = o.dim / o.nnz;
  for (std::size_t n = 0; n < o.vectors; ++n) {
    const std::size_t offset = root.with(n).bits() % stride;
    std::vector<std::size_t> idx(o.nnz);
    std::vector<double> val(o.nnz);
    for (std::size_t e = 0; e < o.nnz; ++e) {
      idx[e] = offset + e * stride;
      val[e] = uniform_open(root.with(n).with(e)) - 0.5;
    }
    vectors.emplace_back(o.dim, std::move(idx), std::move(val));
  }
  const SketchConfig cfg{o.alpha.value, o.k, o.seed, o.dim};
  const auto start = std::chrono::steady_clock::now();
  const auto sketches = project_sign_batch(vectors, cfg, o.threads);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  BenchResult r;
  r.seconds = std::max(elapsed.count(), 1e-9);
  r.projections_per_second = static_cast<double>(o.vectors * o.k) / r.seconds;
  return r;
}

void cmd_bench(const BenchOptions& o, std::ostream& log) {
  const BenchResult r = run_bench(o);
  log << "vectors=" << o.vectors << " D=" << o.dim << " nnz=" << o.nnz << " k=" << o.k
      << " alpha=" << o.alpha.describe() << " threads=" << o.threads << '\n'
      << "wall_seconds=" << r.seconds << " projections_per_second=" << r.projections_per_second
      << '\n';
}

}  // namespace stablesketch
