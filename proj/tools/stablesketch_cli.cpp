// Command-line front end: sketch, kernel, verify, bench.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stablesketch/commands.hpp"
#include "stablesketch/errors.hpp"

namespace ss = stablesketch;

namespace {

struct SketchFlags {
  std::string input;
  std::string output;
  std::string method = "sign";
  std::string alpha = "2";
  std::size_t k = 1024;
  std::uint64_t seed = 1;
  std::size_t buckets = ss::kDefaultBuckets;
  std::optional<std::size_t> dim;
  bool normalize = false;
  unsigned threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input, "Sparse dataset (label idx:val ...)")->required();
    cmd->add_option("--output", output, "Output path")->required();
    cmd->add_option("--method", method, "sign or cws")->capture_default_str();
    cmd->add_option("--alpha", alpha, "Stable index in (0,2], or 0+")->capture_default_str();
    cmd->add_option("--k", k, "Projections / samples per vector")->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    cmd->add_option("--buckets", buckets, "CWS buckets per sample")->capture_default_str();
    cmd->add_option("--dim", dim, "Override the data dimension D");
    cmd->add_flag("--normalize", normalize, "l1-normalize every example first");
    cmd->add_option("--threads", threads, "Worker threads (0 = all)")->capture_default_str();
  }

  [[nodiscard]] ss::SketchOptions resolve() const {
    ss::SketchOptions o;
    o.input = input;
    o.output = output;
    o.method = ss::parse_method(method);
    o.alpha = ss::parse_alpha(alpha);
    o.k = k;
    o.seed = seed;
    o.buckets = buckets;
    o.dim = dim;
    o.normalize = normalize;
    o.threads = threads;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign alpha-stable random projections and 0-bit consistent weighted sampling"};
  app.require_subcommand(1);

  SketchFlags sketch_flags;
  auto* sketch = app.add_subcommand("sketch", "Write encoded sketch features for a dataset");
  sketch_flags.attach(sketch);

  SketchFlags kernel_flags;
  auto* kernel = app.add_subcommand("kernel", "Write the collision-fraction matrix as CSV");
  kernel_flags.attach(kernel);

  std::vector<std::string> verify_alphas{"2", "1", "0+"};
  std::vector<std::string> verify_methods{"sign", "cws"};
  ss::VerifyOptions verify_opts;
  std::optional<std::string> report;
  auto* verify = app.add_subcommand("verify", "Check empirical collision rates against the laws");
  verify->add_option("--alpha", verify_alphas, "Alphas with a known law: 2, 1, 0+")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--method", verify_methods, "sign, cws or both")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--trials", verify_opts.trials, "Random pairs per case")->capture_default_str();
  verify->add_option("--k", verify_opts.k, "Sketch size (>= 1000)")->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "Random seed")->capture_default_str();
  verify->add_option("--repeats", verify_opts.repeats, "Independent sketches averaged per case")
      ->capture_default_str();
  verify->add_option("--threads", verify_opts.threads, "Worker threads (0 = all)")
      ->capture_default_str();
  verify->add_option("--report", report, "JSON report path");

  ss::BenchOptions bench_opts;
  std::string bench_alpha = "2";
  auto* bench = app.add_subcommand("bench", "Measure sign-sketch throughput");
  bench->add_option("--dim", bench_opts.dim, "Dimension D")->capture_default_str();
  bench->add_option("--nnz", bench_opts.nnz, "Nonzeros per vector")->capture_default_str();
  bench->add_option("--k", bench_opts.k, "Projections")->capture_default_str();
  bench->add_option("--alpha", bench_alpha, "Stable index or 0+")->capture_default_str();
  bench->add_option("--vectors", bench_opts.vectors, "Vector count")->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Random seed")->capture_default_str();
  bench->add_option("--threads", bench_opts.threads, "Worker threads (0 = all)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ss::kExitValidation;
  }

  try {
    if (*sketch) {
      ss::cmd_sketch(sketch_flags.resolve(), std::cout);
    } else if (*kernel) {
      ss::cmd_kernel(kernel_flags.resolve(), std::cout);
    } else if (*verify) {
      verify_opts.alphas.clear();
      for (const auto& a : verify_alphas) verify_opts.alphas.push_back(ss::parse_alpha(a).value);
      verify_opts.include_cws = false;
      bool sign = false;
      for (const auto& m : verify_methods) {
        (ss::parse_method(m) == ss::Method::cws ? verify_opts.include_cws : sign) = true;
      }
      if (!sign) verify_opts.alphas.clear();
      std::optional<std::filesystem::path> report_path;
      if (report) report_path = *report;
      return ss::cmd_verify(verify_opts, report_path, std::cout);
    } else if (*bench) {
      bench_opts.alpha = ss::parse_alpha(bench_alpha);
      ss::cmd_bench(bench_opts, std::cout);
    }
  } catch (const ss::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ss::kExitValidation;
  }
  return ss::kExitOk;
}
