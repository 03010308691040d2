#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hck/rational.hpp"

namespace hck {

/// Polynomial in q with integer coefficients; coeffs[i] multiplies q^i.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { if (c != 0) coeffs_.push_back(Integer(c)); }
  static QPoly monomial(Integer c, std::size_t degree);
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  /// Exact quotient; throws InternalError when the division leaves a remainder.
  QPoly divide_exact(const QPoly& divisor) const;
  /// Quotient and remainder; the divisor's leading coefficient must be +-1.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

  Integer evaluate(const Integer& q) const;
  QPoly pow(std::size_t e) const;

  /// Product form over the factors q and (q-1) when it applies, else expanded.
  std::string to_string() const;
  std::string expanded() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace hck
