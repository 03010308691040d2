#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hck/cyclotomic.hpp"
#include "hck/finite_group.hpp"

namespace hck {

/// A class function on a subgroup `domain` of G. values is indexed by the
/// elements of G and is zero off the domain.
struct ClassFunction {
  Subgroup domain;
  std::vector<Cyc> values;

  const Cyc& operator()(Elem g) const { return values[g]; }
  Cyc degree() const { return values[0]; }
};

/// <a, b> over the common domain.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);
ClassFunction restrict_to(const ClassFunction& f, const Subgroup& sub);
ClassFunction induce(const FiniteGroup& g, const ClassFunction& f, const Subgroup& to);
/// f^h(x) = f(h x h^{-1}), a class function on h^{-1} D h.
ClassFunction conjugate(const FiniteGroup& g, const ClassFunction& f, Elem h);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction scale(const ClassFunction& f, const Rational& c);
/// Pointwise product, on the intersection of domains.
ClassFunction pointwise(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b);
bool operator==(const ClassFunction& a, const ClassFunction& b);

/// A matrix representation of a subgroup of G, stored on every element of
/// its domain.
class Representation {
 public:
  /// Extends generator images over the generated subgroup. Every edge
  /// x -> x*s of the Cayley graph is checked, which proves the map is a
  /// homomorphism.
  static Representation from_generators(const FiniteGroup& g, std::shared_ptr<const CyclotomicField> field,
                                        const std::vector<Elem>& gens, const std::vector<CycMatrix>& images);
  /// The d x d upper-left block restricted to `sub`; the complementary
  /// off-diagonal block must vanish on sub.
  Representation sub_block(const Subgroup& sub, std::size_t d) const;

  const Subgroup& domain() const { return domain_; }
  std::size_t degree() const { return degree_; }
  const CycMatrix& operator()(Elem g) const { return mats_[g]; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const ClassFunction& character() const { return character_; }

 private:
  void finish();

  std::shared_ptr<const CyclotomicField> field_;
  Subgroup domain_;
  std::size_t degree_ = 0;
  std::vector<CycMatrix> mats_;  // indexed by element of G
  ClassFunction character_;
};

/// A linear character of a subgroup, ζ_M^{exps[x]}, exps indexed by G.
ClassFunction linear_character(std::shared_ptr<const CyclotomicField> field, std::size_t group_order,
                               const Subgroup& domain, const std::vector<long>& exps);

}  // namespace hck
