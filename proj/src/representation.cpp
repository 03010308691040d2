#include "hck/representation.hpp"

#include <algorithm>

#include "hck/error.hpp"

namespace hck {

namespace {

std::shared_ptr<const CyclotomicField> field_of(const ClassFunction& f) { return f.values.at(0).field(); }

ClassFunction zero_on(const ClassFunction& like, Subgroup domain) {
  ClassFunction r;
  r.domain = std::move(domain);
  r.values.assign(like.values.size(), Cyc(field_of(like)));
  return r;
}

}  // namespace

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.domain != b.domain) throw InternalError("inner product of class functions on different domains");
  Cyc sum(field_of(a));
  for (Elem x : a.domain) sum += a(x) * b(x).conj();
  return sum.rational_value() / Rational(a.domain.size());
}

ClassFunction restrict_to(const ClassFunction& f, const Subgroup& sub) {
  if (!contains(f.domain, sub)) throw InternalError("restriction to a non-subgroup of the domain");
  ClassFunction r = zero_on(f, sub);
  for (Elem x : sub) r.values[x] = f(x);
  return r;
}

ClassFunction induce(const FiniteGroup& g, const ClassFunction& f, const Subgroup& to) {
  if (!contains(to, f.domain)) throw InternalError("induction to a group not containing the domain");
  const auto in = membership(g, f.domain);
  ClassFunction r = zero_on(f, to);
  for (Elem x : to) {
    Cyc s(field_of(f));
    for (Elem y : to) {
      const Elem c = g.conj(y, x);
      if (in[c]) s += f(c);
    }
    r.values[x] = s * Rational(1, f.domain.size());
  }
  return r;
}

ClassFunction conjugate(const FiniteGroup& g, const ClassFunction& f, Elem h) {
  Subgroup dom;
  const Elem hi = g.inv(h);
  for (Elem x : f.domain) dom.push_back(g.conj(hi, x));
  std::sort(dom.begin(), dom.end());
  ClassFunction r = zero_on(f, dom);
  for (Elem x : dom) r.values[x] = f(g.conj(h, x));
  return r;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (a.domain != b.domain) throw InternalError("sum of class functions on different domains");
  ClassFunction r = a;
  for (Elem x : a.domain) r.values[x] += b(x);
  return r;
}

ClassFunction scale(const ClassFunction& f, const Rational& c) {
  ClassFunction r = f;
  for (Elem x : f.domain) r.values[x] = f(x) * c;
  return r;
}

ClassFunction pointwise(const FiniteGroup&, const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r = zero_on(a, intersect(a.domain, b.domain));
  for (Elem x : r.domain) r.values[x] = a(x) * b(x);
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.domain != b.domain) return false;
  for (Elem x : a.domain)
    if (a(x) != b(x)) return false;
  return true;
}

Representation Representation::from_generators(const FiniteGroup& g, std::shared_ptr<const CyclotomicField> field,
                                               const std::vector<Elem>& gens, const std::vector<CycMatrix>& images) {
  if (gens.size() != images.size()) throw InputError("representation: generator and image counts differ");
  Representation r;
  r.field_ = field;
  r.degree_ = images.empty() ? 1 : images.front().size();
  for (const auto& m : images)
    if (m.size() != r.degree_) throw InputError("representation: images of different sizes");
  r.mats_.assign(g.order(), CycMatrix());
  std::vector<char> set(g.order(), 0);
  r.mats_[0] = CycMatrix::identity(field, r.degree_);
  set[0] = 1;
  std::vector<Elem> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem x = order[i];
      const Elem y = g.mul(x, gens[k]);
      CycMatrix m = r.mats_[x] * images[k];
      if (!set[y]) {
        set[y] = 1;
        r.mats_[y] = std::move(m);
        order.push_back(y);
      } else if (!(r.mats_[y] == m)) {
        throw InputError("representation images violate a group relation at element " + std::to_string(y));
      }
    }
  std::sort(order.begin(), order.end());
  r.domain_ = std::move(order);
  r.finish();
  return r;
}

Representation Representation::sub_block(const Subgroup& sub, std::size_t d) const {
  if (!contains(domain_, sub)) throw InputError("sub_block: subgroup not inside the domain");
  if (d == 0 || d > degree_) throw InputError("sub_block: bad block size");
  Representation r;
  r.field_ = field_;
  r.degree_ = d;
  r.domain_ = sub;
  r.mats_.assign(mats_.size(), CycMatrix());
  for (Elem x : sub) {
    const CycMatrix& m = mats_[x];
    for (std::size_t i = d; i < degree_; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!m(i, j).is_zero())
          throw InputError("sub_block: the first " + std::to_string(d) + " coordinates are not invariant");
    CycMatrix b(field_, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) b(i, j) = m(i, j);
    r.mats_[x] = std::move(b);
  }
  r.finish();
  return r;
}

void Representation::finish() {
  character_.domain = domain_;
  character_.values.assign(mats_.size(), Cyc(field_));
  for (Elem x : domain_) character_.values[x] = mats_[x].trace();
}

ClassFunction linear_character(std::shared_ptr<const CyclotomicField> field, std::size_t group_order,
                               const Subgroup& domain, const std::vector<long>& exps) {
  ClassFunction r;
  r.domain = domain;
  r.values.assign(group_order, Cyc(field));
  for (Elem x : domain) r.values[x] = Cyc::root_of_unity(field, exps[x]);
  return r;
}

}  // namespace hck
