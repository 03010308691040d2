#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hck/cyclotomic.hpp"

namespace hck {

using Elem = std::uint32_t;
/// Sorted list of element indices.
using Subgroup = std::vector<Elem>;

inline constexpr std::size_t kDefaultGroupCap = 512;

/// A finite group stored as a full multiplication table. Element 0 is the
/// identity. Groups built from generators number their elements in
/// breadth-first order (right multiplication by the generators in order),
/// and generator k is generators()[k].
class FiniteGroup {
 public:
  /// table[a][b] = a*b. Checks the identity, the Latin-square property and
  /// associativity on a seeded random sample of triples.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::size_t cap = kDefaultGroupCap);
  /// Permutations of {0..d-1}, composed right to left: (p*q)(i) = p(q(i)).
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens,
                                       std::size_t cap = kDefaultGroupCap);
  static FiniteGroup from_matrices(const std::vector<CycMatrix>& gens, std::size_t cap = kDefaultGroupCap);
  /// Element (a, b) gets index a * |B| + b.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^{-1}
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem power(Elem a, long k) const;
  std::size_t element_order(Elem a) const;
  std::size_t exponent() const;
  const std::vector<Elem>& generators() const { return generators_; }
  /// Product of generators()[w[0]] * generators()[w[1]] * ...
  Elem word(const std::vector<std::size_t>& w) const;

 private:
  void finish();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
};

Subgroup generate(const FiniteGroup& g, const std::vector<Elem>& gens);
std::vector<char> membership(const FiniteGroup& g, const Subgroup& s);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal_in(const FiniteGroup& g, const Subgroup& n, const Subgroup& ambient);
bool contains(const Subgroup& big, const Subgroup& small);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
std::size_t index_of(const Subgroup& big, const Subgroup& small);
/// All commutators of `big` lie in `small` (small normal in big assumed).
bool quotient_is_abelian(const FiniteGroup& g, const Subgroup& big, const Subgroup& small);

}  // namespace hck
