#include "hck/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hck {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  IntVec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  IntVec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec scale(std::int64_t c, std::span<const std::int64_t> a) {
  IntVec r(a.begin(), a.end());
  for (auto& x : r) x *= c;
  return r;
}

IntVec negate(std::span<const std::int64_t> a) { return scale(-1, a); }

std::int64_t sup_norm(std::span<const std::int64_t> a) {
  std::int64_t m = 0;
  for (auto x : a) m = std::max<std::int64_t>(m, std::llabs(x));
  return m;
}

std::string to_string(std::span<const std::int64_t> a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

IntVec IntMatrix::operator*(std::span<const std::int64_t> v) const {
  IntVec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::operator<(const IntMatrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return data_ < other.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const {
  std::size_t h = m.rows() * 31 + m.cols();
  for (auto x : m.data()) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
  return h;
}

std::size_t IntVecHash::operator()(const IntVec& v) const {
  std::size_t h = v.size();
  for (auto x : v) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
  return h;
}

}  // namespace hck
