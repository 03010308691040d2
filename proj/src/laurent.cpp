#include "hck/laurent.hpp"

namespace hck {

LaurentScalar LaurentScalar::v_power(std::int64_t k, const Rational& c) {
  LaurentScalar r;
  if (c != 0) r.terms_[k] = c;
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }
  return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
  LaurentScalar r = *this;
  r += o;
  return r;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const { return *this + (-o); }

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
  LaurentScalar r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) r += v_power(a + b, x * y);
  return r;
}

Rational LaurentScalar::evaluate(const Rational& v) const {
  if (v == 0) throw std::domain_error("Laurent polynomial evaluated at v = 0");
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    Rational p = 1;
    const Rational base = k >= 0 ? v : Rational(1) / v;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) p *= base;
    sum += c * p;
  }
  return sum;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const bool unit = mag == 1 && k != 0;
    if (!unit) out += hck::to_string(mag);
    if (k != 0) {
      if (!unit) out += "*";
      out += "v";
      if (k != 1) out += "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
  }
  return out;
}

}  // namespace hck
