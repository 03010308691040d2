#include "hck/cyclotomic.hpp"

#include <numeric>

#include "hck/error.hpp"

namespace hck {

namespace {

using Poly = std::vector<Integer>;  // coefficient of x^i at index i

Poly poly_divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quo(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];  // den is monic
    quo[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return quo;
}

Poly cyclotomic_polynomial(int m) {
  Poly p(m + 1, Integer(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

CyclotomicField::CyclotomicField(int conductor) : m_(conductor) {
  if (m_ < 1 || m_ > 2520) throw InputError("cyclotomic conductor out of range: " + std::to_string(m_));
  const Poly phi = cyclotomic_polynomial(m_);
  phi_ = static_cast<int>(phi.size()) - 1;
  powers_.assign(m_, std::vector<Rational>(phi_, Rational(0)));
  std::vector<Rational> cur(phi_, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < m_; ++k) {
    powers_[k] = cur;
    // Multiply by zeta: shift up, then reduce the x^phi term using Phi_M.
    std::vector<Rational> next(phi_, Rational(0));
    for (int i = 0; i + 1 < phi_; ++i) next[i + 1] = cur[i];
    const Rational top = cur[phi_ - 1];
    if (phi_ == 1) next[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) next[i] -= top * Rational(phi[i]);
    cur = std::move(next);
  }
}

const std::vector<Rational>& CyclotomicField::power(long k) const {
  long r = k % m_;
  if (r < 0) r += m_;
  return powers_[r];
}

Cyc Cyc::root_of_unity(std::shared_ptr<const CyclotomicField> field, long k) {
  Cyc z(field);
  z.c_ = field->power(k);
  return z;
}

Cyc Cyc::from_powers(std::shared_ptr<const CyclotomicField> field, const std::vector<Rational>& c) {
  Cyc z(field);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const auto& p = field->power(static_cast<long>(k));
    for (int i = 0; i < field->degree(); ++i) z.c_[i] += c[k] * p[i];
  }
  return z;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (!f_) return *this = o;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  const int phi = f_->degree();
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  bool any = false;
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) {
        prod[i + j] += c_[i] * o.c_[j];
        any = true;
      }
  }
  Cyc r(f_);
  if (!any) return r;
  for (int d = 0; d < 2 * phi - 1; ++d) {
    if (prod[d] == 0) continue;
    if (d < phi) {
      r.c_[d] += prod[d];
      continue;
    }
    const auto& p = f_->power(d);
    for (int i = 0; i < phi; ++i)
      if (p[i] != 0) r.c_[i] += prod[d] * p[i];
  }
  return r;
}

Cyc Cyc::operator*(const Rational& s) const {
  Cyc r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Cyc Cyc::conj() const {
  Cyc r(f_);
  const int m = f_->conductor();
  for (int k = 0; k < f_->degree(); ++k) {
    if (c_[k] == 0) continue;
    const auto& p = f_->power(m - k);
    for (int i = 0; i < f_->degree(); ++i) r.c_[i] += c_[k] * p[i];
  }
  return r;
}

bool Cyc::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyc::rational_value() const {
  if (!is_rational()) throw InternalError("expected a rational value, got " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

std::string Cyc::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += hck::to_string(c_[k]);
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CycMatrix::CycMatrix(std::shared_ptr<const CyclotomicField> field, std::size_t n)
    : f_(std::move(field)), n_(n), a_(n * n, Cyc(f_)) {}

CycMatrix CycMatrix::identity(std::shared_ptr<const CyclotomicField> field, std::size_t n) {
  CycMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyc(field, Rational(1));
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  CycMatrix r(f_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Cyc& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += x * o(k, j);
    }
  return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  CycMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

CycMatrix CycMatrix::operator*(const Cyc& s) const {
  CycMatrix r = *this;
  for (auto& x : r.a_) x = x * s;
  return r;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Cyc CycMatrix::trace() const {
  Cyc t(f_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix r(f_, n_ * o.n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < o.n_; ++k)
        for (std::size_t l = 0; l < o.n_; ++l) r(i * o.n_ + k, j * o.n_ + l) = (*this)(i, j) * o(k, l);
  return r;
}

std::string CycMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace hck
