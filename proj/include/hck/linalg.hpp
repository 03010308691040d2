#pragma once

#include <cstddef>
#include <vector>

#include "hck/rational.hpp"

namespace hck {

/// Sparse-friendly dense matrix over Q used for exact rank and kernel
/// computations (invariant dimensions, truncated Hecke centers).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void append_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Basis of the right kernel {x : m x = 0}, in reduced echelon form.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m);

}  // namespace hck
