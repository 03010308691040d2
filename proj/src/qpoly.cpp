#include "hck/qpoly.hpp"

#include <algorithm>

#include "hck/error.hpp"

namespace hck {

QPoly QPoly::monomial(Integer c, std::size_t degree) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Integer(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this + neg;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  QPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("polynomial division by zero");
  const Integer& lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1) throw InternalError("polynomial division needs a monic divisor");
  QPoly rem = *this;
  QPoly quo;
  const int dd = divisor.degree();
  if (rem.degree() >= dd) quo.coeffs_.assign(rem.degree() - dd + 1, Integer(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    Integer c = rem.coeffs_.back() * lead;  // lead is +-1
    quo.coeffs_[shift] = c;
    for (int i = 0; i <= dd; ++i) rem.coeffs_[shift + i] -= c * divisor.coeffs_[i];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  auto [quo, rem] = divmod(divisor);
  if (!rem.is_zero())
    throw InternalError("inexact polynomial division: " + expanded() + " by " + divisor.expanded());
  return quo;
}

Integer QPoly::evaluate(const Integer& q) const {
  Integer v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
  return v;
}

QPoly QPoly::pow(std::size_t e) const {
  QPoly r(1);
  for (std::size_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string QPoly::expanded() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || i == 0) out += a.get_str();
    if (i > 0 && a != 1) out += "*";
    if (i == 1) out += "q";
    if (i > 1) out += "q^" + std::to_string(i);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  // Peel off powers of q and (q - 1); print the rest expanded.
  QPoly rest = *this;
  std::size_t qpow = 0;
  while (rest.coeffs_.size() > 1 && rest.coeffs_[0] == 0) {
    rest.coeffs_.erase(rest.coeffs_.begin());
    ++qpow;
  }
  const QPoly qm1 = QPoly::q() - QPoly(1);
  std::size_t mpow = 0;
  while (rest.degree() > 0) {
    auto [quo, rem] = rest.divmod(qm1);
    if (!rem.is_zero()) break;
    rest = quo;
    ++mpow;
  }
  std::vector<std::string> factors;
  const bool unit_rest = rest.degree() == 0 && (rest.coeffs_[0] == 1 || rest.coeffs_[0] == -1);
  if (!unit_rest) factors.push_back(rest.degree() == 0 ? rest.expanded() : "(" + rest.expanded() + ")");
  if (qpow == 1) factors.push_back("q");
  if (qpow > 1) factors.push_back("q^" + std::to_string(qpow));
  if (mpow == 1) factors.push_back("(q-1)");
  if (mpow > 1) factors.push_back("(q-1)^" + std::to_string(mpow));
  std::string sign = unit_rest && rest.coeffs_[0] == -1 ? "-" : "";
  if (factors.empty()) return sign + "1";
  std::string out = sign;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  return out;
}

}  // namespace hck
