#include "hck/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "hck/error.hpp"

namespace hck {

namespace {

// Breadth-first closure of a generating set under right multiplication.
// `Key` must be ordered; `mul` multiplies keys.
struct Closure {
  std::vector<std::vector<Elem>> table;
  std::vector<Elem> generators;
};

template <class Key, class Mul>
Closure close_under(const std::vector<Key>& gens, const Key& identity, Mul mul, std::size_t cap) {
  std::map<Key, Elem> index;
  std::vector<Key> elems{identity};
  index.emplace(identity, 0);
  std::vector<std::vector<Elem>> right(1);  // right[i][k] = elems[i] * gens[k]
  for (std::size_t i = 0; i < elems.size(); ++i) {
    right[i].resize(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Key next = mul(elems[i], gens[k]);
      auto it = index.find(next);
      if (it == index.end()) {
        if (elems.size() >= cap) throw CapExceeded("group order exceeds cap " + std::to_string(cap));
        it = index.emplace(next, static_cast<Elem>(elems.size())).first;
        elems.push_back(std::move(next));
        right.emplace_back();
      }
      right[i][k] = it->second;
    }
  }
  // Each element as a word, then left-multiply along the word.
  const std::size_t n = elems.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<Elem> via_elem(n, 0);
  std::vector<std::size_t> via_gen(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!seen[right[i][k]]) {
        seen[right[i][k]] = 1;
        via_elem[right[i][k]] = static_cast<Elem>(i);
        via_gen[right[i][k]] = k;
      }
  // table[a][b] = table[a][via_elem(b)] * gens[via_gen(b)], filled in BFS order of b.
  for (std::size_t a = 0; a < n; ++a) table[a][0] = static_cast<Elem>(a);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) table[a][b] = right[table[a][via_elem[b]]][via_gen[b]];
  std::vector<Elem> generators;
  for (std::size_t k = 0; k < gens.size(); ++k) generators.push_back(right[0][k]);
  return {std::move(table), std::move(generators)};
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::size_t cap) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("empty multiplication table");
  if (n > cap) throw CapExceeded("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InputError("multiplication table is not square");
    std::vector<char> row(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = table[a][b];
      if (c >= n) throw InputError("multiplication table entry out of range");
      if (row[c]) throw InputError("multiplication table row " + std::to_string(a) + " repeats an entry");
      row[c] = 1;
      g.table_[a * n + b] = c;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw InputError("element 0 is not the identity");
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> col(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (col[g.mul(a, b)]) throw InputError("multiplication table column " + std::to_string(b) + " repeats an entry");
      col[g.mul(a, b)] = 1;
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = std::min<std::size_t>(n * n * n, 20000);
  for (std::size_t t = 0; t < samples; ++t) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw InputError("multiplication table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                       "," + std::to_string(c) + ")");
  }
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens, std::size_t cap) {
  if (gens.empty()) throw InputError("no permutation generators");
  const std::size_t d = gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != d) throw InputError("permutation generators of different degrees");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < d; ++i)
      if (sorted[i] != static_cast<int>(i)) throw InputError("generator is not a permutation of 0..d-1");
  }
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  Closure c = close_under(gens, id, compose, cap);
  FiniteGroup g = from_table(c.table, cap);
  g.generators_ = std::move(c.generators);
  return g;
}

FiniteGroup FiniteGroup::from_matrices(const std::vector<CycMatrix>& gens, std::size_t cap) {
  if (gens.empty()) throw InputError("no matrix generators");
  const auto field = gens.front()(0, 0).field();
  const std::size_t d = gens.front().size();
  // Matrices are compared through their flattened rational coordinates.
  using Key = std::vector<Rational>;
  auto flatten = [&](const CycMatrix& m) {
    Key k;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& c : m(i, j).coeffs()) k.push_back(c);
    return k;
  };
  auto unflatten = [&](const Key& k) {
    CycMatrix m(field, d);
    const std::size_t phi = field->degree();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> c(k.begin() + (i * d + j) * phi, k.begin() + (i * d + j + 1) * phi);
        m(i, j) = Cyc::from_powers(field, c);
      }
    return m;
  };
  std::vector<Key> keys;
  for (const auto& m : gens) {
    if (m.size() != d) throw InputError("matrix generators of different sizes");
    keys.push_back(flatten(m));
  }
  auto mul = [&](const Key& a, const Key& b) { return flatten(unflatten(a) * unflatten(b)); };
  Closure c = close_under(keys, flatten(CycMatrix::identity(field, d)), mul, cap);
  FiniteGroup g = from_table(c.table, cap);
  g.generators_ = std::move(c.generators);
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Elem>> table(na * nb, std::vector<Elem>(na * nb));
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      for (Elem u = 0; u < na; ++u)
        for (Elem v = 0; v < nb; ++v)
          table[x * nb + y][u * nb + v] = static_cast<Elem>(a.mul(x, u) * nb + b.mul(y, v));
  FiniteGroup g = from_table(table, std::max(kDefaultGroupCap, na * nb));
  for (Elem s : a.generators()) g.generators_.push_back(static_cast<Elem>(s * nb));
  for (Elem s : b.generators()) g.generators_.push_back(s);
  return g;
}

Elem FiniteGroup::power(Elem a, long k) const {
  const long ord = static_cast<long>(element_order(a));
  k %= ord;
  if (k < 0) k += ord;
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Elem a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

Elem FiniteGroup::word(const std::vector<std::size_t>& w) const {
  Elem r = 0;
  for (std::size_t k : w) {
    if (k >= generators_.size()) throw InputError("word uses generator " + std::to_string(k) + " out of range");
    r = mul(r, generators_[k]);
  }
  return r;
}

Subgroup generate(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  Subgroup out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      const Elem x = g.mul(out[i], s);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> membership(const FiniteGroup& g, const Subgroup& s) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  return in;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
  const auto in = membership(g, s);
  if (!in[0]) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& n, const Subgroup& ambient) {
  const auto in = membership(g, n);
  for (Elem a : ambient)
    for (Elem x : n)
      if (!in[g.conj(a, x)]) return false;
  return true;
}

bool contains(const Subgroup& big, const Subgroup& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t index_of(const Subgroup& big, const Subgroup& small) {
  if (small.empty() || big.size() % small.size() != 0) throw InternalError("index of a non-subgroup");
  return big.size() / small.size();
}

bool quotient_is_abelian(const FiniteGroup& g, const Subgroup& big, const Subgroup& small) {
  const auto in = membership(g, small);
  for (Elem a : big)
    for (Elem b : big)
      if (!in[g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))]) return false;
  return true;
}

}  // namespace hck
