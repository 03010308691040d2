#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hck/rational.hpp"

namespace hck {

/// Laurent polynomial in a formal v with rational coefficients. The Hecke
/// parameter is q = v^2.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long c) : LaurentScalar(Rational(c)) {}  // NOLINT: implicit on purpose
  LaurentScalar(const Rational& c) {                     // NOLINT
    if (c != 0) terms_[0] = c;
  }
  static LaurentScalar v_power(std::int64_t k, const Rational& c = 1);
  static LaurentScalar q() { return v_power(2); }

  LaurentScalar operator+(const LaurentScalar& o) const;
  LaurentScalar operator-(const LaurentScalar& o) const;
  LaurentScalar operator-() const;
  LaurentScalar operator*(const LaurentScalar& o) const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentScalar& o) const { return terms_ != o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  Rational evaluate(const Rational& v) const;
  std::string to_string() const;

 private:
  std::map<std::int64_t, Rational> terms_;  // exponent of v -> nonzero coefficient
};

inline bool is_zero(const LaurentScalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

}  // namespace hck
