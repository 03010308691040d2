#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hck {

using IntVec = std::vector<std::int64_t>;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec scale(std::int64_t c, std::span<const std::int64_t> a);
IntVec negate(std::span<const std::int64_t> a);
std::int64_t sup_norm(std::span<const std::int64_t> a);
std::string to_string(std::span<const std::int64_t> a);

/// Dense row-major integer matrix. Used for lattice actions of Weyl group
/// elements, which are always square and unimodular.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntVec operator*(std::span<const std::int64_t> v) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix& other) const = default;
  bool operator<(const IntMatrix& other) const;

  const std::vector<std::int64_t>& data() const { return data_; }
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const;
};

}  // namespace hck
