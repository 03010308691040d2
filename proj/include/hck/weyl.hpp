#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hck/root_datum.hpp"

namespace hck {

inline constexpr std::size_t kDefaultWeylCap = 10080;

/// A finite Weyl group element. Equality is decided by the lattice action;
/// the word is a reduced expression but is not canonical.
struct WeylElement {
  std::vector<std::size_t> word;  // simple reflection indices
  IntMatrix action;               // on X_*(T)
  IntMatrix dual_action;          // on X^*(T), equal to (action^{-1})^T

  Coweight apply(std::span<const std::int64_t> coweight) const { return action * coweight; }
  IntVec apply_to_character(std::span<const std::int64_t> character) const {
    return dual_action * character;
  }
  bool operator==(const WeylElement& other) const { return action == other.action; }
};

/// Fully enumerated finite Weyl group with multiplication by simple
/// reflections tabulated. Index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum, std::size_t cap = kDefaultWeylCap);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  std::size_t index_of(const IntMatrix& action) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t length(std::size_t a) const { return length_[a]; }
  /// Index of w * s_i.
  std::size_t times_simple(std::size_t w, std::size_t i) const { return right_[w][i]; }
  /// Index of s_i * w.
  std::size_t simple_times(std::size_t i, std::size_t w) const { return left_[w][i]; }

  /// Elements of the standard parabolic subgroup W_theta, theta indexing simple roots.
  std::vector<std::size_t> parabolic(std::span<const std::size_t> theta) const;

 private:
  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> index_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> length_;
};

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, std::size_t cap = kDefaultWeylCap);

/// w = w1 * w2 with w1 in W_theta and w2^{-1}(a) > 0 for all a in theta.
/// Returns the indices (w1, w2).
std::pair<std::size_t, std::size_t> coset_decompose(const WeylGroup& group, std::size_t w,
                                                    std::span<const std::size_t> theta);

/// The W_0-orbit of a coweight, sorted lexicographically.
std::vector<Coweight> weyl_orbit(const RootDatum& datum, const Coweight& lambda);

Coweight dominant_representative(const RootDatum& datum, const Coweight& lambda);

std::size_t stabilizer_order(const WeylGroup& group, const Coweight& lambda);

}  // namespace hck
