#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hck/rational.hpp"

namespace hck {

/// Q(zeta_M) with elements in the power basis 1, zeta, ..., zeta^{phi(M)-1},
/// reduced modulo the cyclotomic polynomial Phi_M.
class CyclotomicField {
 public:
  explicit CyclotomicField(int conductor);

  int conductor() const { return m_; }
  int degree() const { return phi_; }
  /// Coordinates of zeta^k, any integer k.
  const std::vector<Rational>& power(long k) const;

 private:
  int m_;
  int phi_;
  std::vector<std::vector<Rational>> powers_;  // zeta^k for 0 <= k < M
};

class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(std::shared_ptr<const CyclotomicField> field) : f_(std::move(field)), c_(f_->degree()) {}
  Cyc(std::shared_ptr<const CyclotomicField> field, const Rational& r) : Cyc(std::move(field)) { c_[0] = r; }
  static Cyc root_of_unity(std::shared_ptr<const CyclotomicField> field, long k);
  /// Sum of c[k] zeta^k, for coefficient vectors of any length.
  static Cyc from_powers(std::shared_ptr<const CyclotomicField> field, const std::vector<Rational>& c);

  const std::shared_ptr<const CyclotomicField>& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const Rational& r) const;
  Cyc& operator+=(const Cyc& o);
  bool operator==(const Cyc& o) const { return c_ == o.c_; }
  bool operator!=(const Cyc& o) const { return c_ != o.c_; }

  /// Complex conjugate, zeta -> zeta^{-1}.
  Cyc conj() const;
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicField> f_;
  std::vector<Rational> c_;
};

/// Square matrices over Q(zeta_M).
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::shared_ptr<const CyclotomicField> field, std::size_t n);
  static CycMatrix identity(std::shared_ptr<const CyclotomicField> field, std::size_t n);

  std::size_t size() const { return n_; }
  Cyc& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Cyc& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator*(const Cyc& s) const;
  bool operator==(const CycMatrix& o) const { return a_ == o.a_; }
  bool is_zero() const;
  Cyc trace() const;
  /// Kronecker product.
  CycMatrix kron(const CycMatrix& o) const;
  std::string to_string() const;

 private:
  std::shared_ptr<const CyclotomicField> f_;
  std::size_t n_ = 0;
  std::vector<Cyc> a_;
};

}  // namespace hck
