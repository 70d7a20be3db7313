#include "stablesketch/sparse_vector.hpp"

#include <cmath>
#include <string>

#include "stablesketch/errors.hpp"

namespace stablesketch {

SparseVector::SparseVector(std::size_t dim, std::vector<std::size_t> indices,
                           std::vector<double> values)
    : dim_(dim) {
  if (indices.size() != values.size()) {
    throw ValidationError("sparse vector: index and value counts differ");
  }
  indices_.reserve(indices.size());
  values_.reserve(values.size());
  for (std::size_t n = 0; n < indices.size(); ++n) {
    if (indices[n] >= dim) {
      throw ValidationError("sparse vector: index " + std::to_string(indices[n]) +
                            " out of range for dimension " + std::to_string(dim));
    }
    if (n > 0 && indices[n] <= indices[n - 1]) {
      throw ValidationError("sparse vector: indices must be strictly increasing");
    }
    if (!std::isfinite(values[n])) {
      throw ValidationError("sparse vector: non-finite value at index " +
                            std::to_string(indices[n]));
    }
    if (values[n] == 0.0) continue;
    indices_.push_back(indices[n]);
    values_.push_back(values[n]);
  }
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  std::vector<std::size_t> idx;
  std::vector<double> val;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      idx.push_back(i);
      val.push_back(dense[i]);
    }
  }
  return SparseVector(dense.size(), std::move(idx), std::move(val));
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t n = 0; n < indices_.size(); ++n) out[indices_[n]] = values_[n];
  return out;
}

SparseVector SparseVector::scaled(double c) const {
  std::vector<double> val(values_);
  for (double& x : val) x *= c;
  return SparseVector(dim_, indices_, std::move(val));
}

SparseVector SparseVector::with_dim(std::size_t new_dim) const {
  if (new_dim < dim_) {
    throw ValidationError("sparse vector: cannot shrink dimension " + std::to_string(dim_) +
                          " to " + std::to_string(new_dim));
  }
  SparseVector out = *this;
  out.dim_ = new_dim;
  return out;
}

bool SparseVector::nonnegative() const noexcept {
  for (double x : values_) {
    if (x < 0.0) return false;
  }
  return true;
}

double SparseVector::sum() const noexcept {
  double s = 0.0;
  for (double x : values_) s += x;
  return s;
}

}  // namespace stablesketch
