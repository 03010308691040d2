#include "hck/iwahori_hecke.hpp"

#include <algorithm>
#include <set>
#include <type_traits>

#include "hck/error.hpp"
#include "hck/linalg.hpp"

namespace hck {

namespace {

template <class Scalar>
void add_term(BasicHeckeElement<Scalar>& x, const HeckeLabel& label, const std::type_identity_t<Scalar>& c) {
  if (is_zero(c)) return;
  auto it = x.find(label);
  if (it == x.end()) {
    x.emplace(label, c);
    return;
  }
  it->second = it->second + c;
  if (is_zero(it->second)) x.erase(it);
}

std::string theta_label_string(const Coweight& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

std::string word_string(const WeylElement& w) {
  std::string s;
  for (std::size_t k : w.word) s += (s.empty() ? "s" : " s") + std::to_string(k + 1);
  return s;
}

Coweight plus(const Coweight& a, const Coweight& b, std::int64_t k = 1) {
  Coweight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

// (theta_lambda - theta_{s lambda}) / (1 - theta_{-alpha^vee}) in the group
// ring of X_*(T), as coweight -> integer coefficient. The division is
// checked by multiplying back.
std::map<Coweight, std::int64_t> divided_difference(const RootDatum& d, std::size_t i, const Coweight& lambda) {
  const Root& alpha = d.root(d.simple_roots()[i]);
  const std::int64_t k = d.pairing(alpha.character, lambda);
  std::map<Coweight, std::int64_t> quot;
  if (k > 0)
    for (std::int64_t j = 0; j < k; ++j) quot[plus(lambda, alpha.coroot, -j)] += 1;
  else
    for (std::int64_t j = 1; j <= -k; ++j) quot[plus(lambda, alpha.coroot, j)] -= 1;

  std::map<Coweight, std::int64_t> back;
  for (const auto& [mu, c] : quot) {
    back[mu] += c;
    back[plus(mu, alpha.coroot, -1)] -= c;
  }
  std::map<Coweight, std::int64_t> num;
  num[lambda] += 1;
  num[plus(lambda, alpha.coroot, -k)] -= 1;
  std::erase_if(back, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  if (back != num) throw InternalError("Bernstein divided difference is not exact");
  return quot;
}

}  // namespace

template <class Scalar>
BasicHeckeElement<Scalar> operator+(const BasicHeckeElement<Scalar>& a, const BasicHeckeElement<Scalar>& b) {
  BasicHeckeElement<Scalar> r = a;
  for (const auto& [l, c] : b) add_term(r, l, c);
  return r;
}

template <class Scalar>
BasicHeckeElement<Scalar> operator-(const BasicHeckeElement<Scalar>& a, const BasicHeckeElement<Scalar>& b) {
  BasicHeckeElement<Scalar> r = a;
  for (const auto& [l, c] : b) add_term(r, l, Scalar(0) - c);
  return r;
}

template <class Scalar>
BasicHeckeElement<Scalar> scale(const BasicHeckeElement<Scalar>& a, const Scalar& c) {
  BasicHeckeElement<Scalar> r;
  for (const auto& [l, x] : a) add_term(r, l, x * c);
  return r;
}

template <class Scalar>
HeckeAlgebra<Scalar>::HeckeAlgebra(const WeylGroup& group, Scalar q)
    : group_(&group), q_(q), q_minus_1_(q - Scalar(1)) {}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::one() const {
  return t(0);
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::t(std::size_t w) const {
  return {{{Coweight(group_->datum().rank(), 0), w}, Scalar(1)}};
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::theta(const Coweight& lambda) const {
  if (lambda.size() != group_->datum().rank()) throw InputError("coweight has the wrong rank");
  return {{{lambda, 0}, Scalar(1)}};
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::simple_times_theta(std::size_t i,
                                                                               const Coweight& lambda) const {
  Element r;
  const std::size_t s = group_->times_simple(0, i);
  add_term(r, {(*group_)[s].apply(lambda), s}, Scalar(1));
  for (const auto& [mu, c] : divided_difference(group_->datum(), i, lambda))
    add_term(r, {mu, 0}, q_minus_1_ * Scalar(c));
  return r;
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::left_simple(std::size_t i, const Element& x) const {
  Element r;
  for (const auto& [label, c] : x) {
    const auto& [lambda, w] = label;
    for (const auto& [l2, c2] : simple_times_theta(i, lambda)) {
      // theta_mu T_u T_w with u in {e, s_i}
      const auto& [mu, u] = l2;
      const Scalar coeff = c * c2;
      if (u == 0) {
        add_term(r, {mu, w}, coeff);
        continue;
      }
      const std::size_t sw = group_->simple_times(i, w);
      if (group_->length(sw) > group_->length(w)) {
        add_term(r, {mu, sw}, coeff);
      } else {
        add_term(r, {mu, w}, coeff * q_minus_1_);
        add_term(r, {mu, sw}, coeff * q_);
      }
    }
  }
  return r;
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::right_simple(const Element& x, std::size_t i) const {
  Element r;
  for (const auto& [label, c] : x) {
    const auto& [lambda, w] = label;
    const std::size_t ws = group_->times_simple(w, i);
    if (group_->length(ws) > group_->length(w)) {
      add_term(r, {lambda, ws}, c);
    } else {
      add_term(r, {lambda, w}, c * q_minus_1_);
      add_term(r, {lambda, ws}, c * q_);
    }
  }
  return r;
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::multiply(const Element& x, const Element& y) const {
  Element r;
  // (theta_lambda T_w)(theta_mu T_u) = theta_lambda (T_w theta_mu) T_u
  std::map<std::pair<std::size_t, Coweight>, Element> tw_theta;
  for (const auto& [lx, cx] : x)
    for (const auto& [ly, cy] : y) {
      const auto& [lambda, w] = lx;
      const auto& [mu, u] = ly;
      auto key = std::make_pair(w, mu);
      auto it = tw_theta.find(key);
      if (it == tw_theta.end()) {
        Element m = theta(mu);
        const auto& word = (*group_)[w].word;
        for (auto k = word.rbegin(); k != word.rend(); ++k) m = left_simple(*k, m);
        it = tw_theta.emplace(std::move(key), std::move(m)).first;
      }
      Element m;
      for (const auto& [l, c] : it->second) add_term(m, {plus(l.first, lambda), l.second}, c);
      for (std::size_t k : (*group_)[u].word) m = right_simple(m, k);
      for (const auto& [l, c] : m) add_term(r, l, c * cx * cy);
    }
  return r;
}

template <class Scalar>
typename HeckeAlgebra<Scalar>::Element HeckeAlgebra<Scalar>::commutator(const Element& x, const Element& y) const {
  return multiply(x, y) - multiply(y, x);
}

template <class Scalar>
bool HeckeAlgebra<Scalar>::is_central(const Element& z) const {
  for (std::size_t i = 0; i < group_->datum().semisimple_rank(); ++i)
    if (!commutator(t_simple(i), z).empty()) return false;
  for (std::size_t j = 0; j < group_->datum().rank(); ++j) {
    Coweight e(group_->datum().rank(), 0);
    e[j] = 1;
    if (!commutator(theta(e), z).empty()) return false;
  }
  return true;
}

template class HeckeAlgebra<LaurentScalar>;
template class HeckeAlgebra<Rational>;
template HeckeElement operator+(const HeckeElement&, const HeckeElement&);
template HeckeElement operator-(const HeckeElement&, const HeckeElement&);
template HeckeElement scale(const HeckeElement&, const LaurentScalar&);
template BasicHeckeElement<Rational> operator+(const BasicHeckeElement<Rational>&, const BasicHeckeElement<Rational>&);
template BasicHeckeElement<Rational> operator-(const BasicHeckeElement<Rational>&, const BasicHeckeElement<Rational>&);
template BasicHeckeElement<Rational> scale(const BasicHeckeElement<Rational>&, const Rational&);

BasicHeckeElement<Rational> specialize(const HeckeElement& x, const Rational& v0) {
  BasicHeckeElement<Rational> r;
  for (const auto& [l, c] : x) add_term(r, l, c.evaluate(v0));
  return r;
}

HeckeElement theta_from_dominant(const HeckeAlgebra<LaurentScalar>& h, const Coweight& lambda1,
                                 const Coweight& lambda2) {
  const RootDatum& d = h.group().datum();
  if (!d.is_dominant(lambda1) || !d.is_dominant(lambda2)) throw InputError("theta_from_dominant needs dominant coweights");
  Coweight neg = lambda2;
  for (auto& x : neg) x = -x;
  return h.multiply(h.theta(lambda1), h.theta(neg));
}

CentralElement central_element(const HeckeAlgebra<LaurentScalar>& h, const Coweight& mu) {
  const RootDatum& d = h.group().datum();
  CentralElement out;
  out.mu = dominant_representative(d, mu);
  out.normalized = out.mu != mu;
  for (const auto& lambda : weyl_orbit(d, out.mu)) out.element = out.element + h.theta(lambda);
  return out;
}

SatakeReport satake_check(const WeylGroup& group, std::int64_t radius, const Rational& v0) {
  if (radius < 0) throw InputError("radius must be >= 0");
  if (v0 == 0) throw InputError("v0 must be nonzero");
  const RootDatum& d = group.datum();
  const std::size_t dim = d.rank();
  SatakeReport out;
  out.v0 = v0;

  // lambda-closure of the box
  std::set<Coweight> lambdas, dominant;
  {
    Coweight cur(dim, -radius);
    while (true) {
      for (const auto& l : weyl_orbit(d, cur)) lambdas.insert(l);
      dominant.insert(dominant_representative(d, cur));
      std::size_t k = dim;
      while (k > 0 && cur[k - 1] == radius) cur[--k] = -radius;
      if (k == 0) break;
      ++cur[k - 1];
    }
  }

  const HeckeAlgebra<LaurentScalar> h(group, LaurentScalar::q());
  out.all_central = true;
  for (const auto& mu : dominant) {
    out.central.push_back(central_element(h, mu));
    if (!h.is_central(out.central.back().element)) {
      out.all_central = false;
      out.witnesses.push_back("z_mu is not central for mu = " + theta_label_string(mu));
    }
  }

  std::vector<HeckeLabel> labels;
  for (const auto& l : lambdas)
    for (std::size_t w = 0; w < group.size(); ++w) labels.emplace_back(l, w);
  out.truncated_dimension = labels.size();
  {
    // Independence of the z_mu (rational 0/1 coefficients).
    RationalMatrix m(0, labels.size());
    for (const auto& z : out.central) {
      std::vector<Rational> row(labels.size(), Rational(0));
      for (const auto& [l, c] : z.element) {
        const auto it = std::lower_bound(labels.begin(), labels.end(), l);
        if (it == labels.end() || *it != l || !c.terms().count(0) || c.terms().size() != 1)
          throw InternalError("central element outside the truncation");
        row[it - labels.begin()] = c.terms().at(0);
      }
      m.append_row(row);
    }
    out.independent = rank(m) == out.central.size();
    if (!out.independent) out.witnesses.push_back("the z_mu are linearly dependent");
  }

  // Commutators with the generators, at q = v0^2.
  const HeckeAlgebra<Rational> hs(group, v0 * v0);
  std::vector<BasicHeckeElement<Rational>> gens;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) gens.push_back(hs.t_simple(i));
  for (std::size_t j = 0; j < dim; ++j) {
    Coweight e(dim, 0);
    e[j] = 1;
    gens.push_back(hs.theta(e));
  }
  std::map<std::pair<std::size_t, HeckeLabel>, std::size_t> row_index;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const BasicHeckeElement<Rational> basis{{labels[c], Rational(1)}};
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (const auto& [l, x] : hs.commutator(gens[g], basis)) {
        const auto key = std::make_pair(g, l);
        auto it = row_index.find(key);
        if (it == row_index.end()) it = row_index.emplace(key, row_index.size()).first;
        columns[c].emplace_back(it->second, x);
      }
  }
  RationalMatrix m(row_index.size(), labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c)
    for (const auto& [r, x] : columns[c]) m(r, c) = x;
  out.kernel_dimension = labels.size() - (row_index.empty() ? 0 : rank(m));
  if (out.kernel_dimension != out.central.size())
    out.witnesses.push_back("kernel dimension " + std::to_string(out.kernel_dimension) + " at v = " + to_string(v0) +
                            " differs from the number of orbit sums " + std::to_string(out.central.size()));
  out.passed = out.witnesses.empty();
  return out;
}

std::string to_string(const WeylGroup& group, const HeckeElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*theta" + theta_label_string(l.first);
    if (l.second != 0) out += "*T(" + word_string(group[l.second]) + ")";
  }
  return out;
}

nlohmann::json to_json(const WeylGroup& group, const HeckeElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [l, c] : x) {
    std::vector<std::size_t> word;
    for (std::size_t k : group[l.second].word) word.push_back(k + 1);
    terms.push_back({{"lambda", l.first}, {"w", word}, {"coefficient", c.to_string()}});
  }
  return terms;
}

}  // namespace hck
