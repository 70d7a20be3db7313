#include "stablesketch/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "stablesketch/errors.hpp"

namespace stablesketch {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_space(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_space(rest[e])) ++e;
  const std::string_view tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

long parse_label(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  long label = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), label);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(line, "label '" + std::string(tok) + "' is not an integer");
  }
  return label;
}

double parse_value(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty() || !std::isfinite(value)) {
    throw ParseError(line, "value '" + std::string(tok) + "' is not a finite number");
  }
  return value;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), index);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(line, "index '" + std::string(tok) + "' is not a positive integer");
  }
  if (index == 0) throw ParseError(line, "indices are 1-based; got 0");
  return index;
}

}  // namespace

std::vector<SparseVector> LabeledDataset::vectors() const {
  std::vector<SparseVector> out;
  out.reserve(examples.size());
  for (const auto& e : examples) out.push_back(e.vector);
  return out;
}

LabeledDataset parse_dataset(std::istream& in, std::optional<std::size_t> dim) {
  struct Row {
    long label;
    std::vector<std::size_t> idx;
    std::vector<double> val;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::size_t max_index = 0;  // 1-based
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view rest(text);
    const std::string_view label_tok = next_token(rest);
    if (label_tok.empty()) continue;
    Row row{parse_label(label_tok, line), {}, {}, line};
    for (std::string_view tok = next_token(rest); !tok.empty(); tok = next_token(rest)) {
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line, "feature '" + std::string(tok) + "' is not of the form idx:val");
      }
      const std::size_t index = parse_index(tok.substr(0, colon), line);
      const double value = parse_value(tok.substr(colon + 1), line);
      if (!row.idx.empty() && index <= row.idx.back() + 1) {
        throw ParseError(line, "index " + std::to_string(index) +
                                   " is not strictly greater than the previous index " +
                                   std::to_string(row.idx.back() + 1));
      }
      if (dim && index > *dim) {
        throw ParseError(line, "index " + std::to_string(index) + " exceeds declared dimension " +
                                   std::to_string(*dim));
      }
      max_index = std::max(max_index, index);
      row.idx.push_back(index - 1);
      row.val.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw Error("read failure while parsing dataset");

  LabeledDataset data;
  data.dim = dim.value_or(max_index);
  data.examples.reserve(rows.size());
  for (auto& r : rows) {
    data.examples.push_back(
        {r.label, SparseVector(data.dim, std::move(r.idx), std::move(r.val)), r.line});
  }
  return data;
}

LabeledDataset read_dataset(const std::filesystem::path& path, std::optional<std::size_t> dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open dataset '" + path.string() + "'");
  return parse_dataset(in, dim);
}

SparseVector l1_normalize(const SparseVector& v) {
  if (!v.nonnegative()) throw ValidationError("l1_normalize: negative entry");
  const double s = v.sum();
  if (!(s > 0.0)) throw ValidationError("l1_normalize: zero vector");
  std::vector<double> val(v.values().begin(), v.values().end());
  for (double& x : val) x /= s;
  return SparseVector(v.dim(), {v.indices().begin(), v.indices().end()}, std::move(val));
}

void write_features(std::span<const LabeledFeatures> rows, std::ostream& out) {
  for (const auto& r : rows) {
    if (r.features.length() != rows.front().features.length()) {
      throw ValidationError("write_features: rows have different feature lengths");
    }
  }
  std::string buf;
  for (const auto& r : rows) {
    buf.clear();
    buf += std::to_string(r.label);
    for (std::size_t pos : r.features.ones()) {
      buf += ' ';
      buf += std::to_string(pos + 1);
      buf += ":1";
    }
    buf += '\n';
    out << buf;
  }
  out.flush();
  if (!out) throw Error("write failure while writing features");
}

void write_dataset(const LabeledDataset& data, std::ostream& out) {
  char num[64];
  std::string buf;
  for (const auto& e : data.examples) {
    buf.clear();
    buf += std::to_string(e.label);
    const auto idx = e.vector.indices();
    const auto val = e.vector.values();
    for (std::size_t n = 0; n < idx.size(); ++n) {
      const auto res = std::to_chars(num, num + sizeof num, val[n], std::chars_format::general, 17);
      buf += ' ';
      buf += std::to_string(idx[n] + 1);
      buf += ':';
      buf.append(num, res.ptr);
    }
    buf += '\n';
    out << buf;
  }
  out.flush();
  if (!out) throw Error("write failure while writing dataset");
}

}  // namespace stablesketch
