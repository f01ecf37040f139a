#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hmat/errors.hpp"
#include "hmat/sign_vector.hpp"

namespace hmat {

// An r x n array of +1/-1 entries held as r bit-packed rows.
// Immutable after construction.
class SignMatrix {
 public:
  explicit SignMatrix(std::vector<SignVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw ShapeError("matrix needs at least one row");
    cols_ = rows_.front().size();
    for (const auto& r : rows_)
      if (r.size() != cols_)
        throw DimensionError("all matrix rows must have the same length");
  }

  // Build from a callable sign_at(i, j) -> +1/-1.
  template <typename F>
  static SignMatrix generate(std::size_t r, std::size_t n, F&& sign_at) {
    if (r == 0 || n == 0) throw ShapeError("matrix dimensions must be positive");
    std::vector<SignVector> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
      rows.push_back(SignVector::generate(n, [&](std::size_t j) { return sign_at(i, j); }));
    return SignMatrix(std::move(rows));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_.size() == cols_; }

  const SignVector& row(std::size_t i) const { return rows_[i]; }
  int entry(std::size_t i, std::size_t j) const { return rows_[i].sign(j); }

  bool operator==(const SignMatrix&) const = default;

 private:
  std::size_t cols_;
  std::vector<SignVector> rows_;
};

}  // namespace hmat
