#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hck/rational.hpp"
#include "hck/weyl.hpp"

namespace hck {

bool is_prime_power(std::int64_t q);

/// A character of T_0/T_1 = X_*(T) (x) F_q^x, written as exponents of a
/// fixed generator of the character group of F_q^x, one per coweight basis
/// vector, reduced mod q-1. The splitting T/T_1 = X_*(T) x T_0/T_1 is the
/// one given by a fixed uniformizer.
using ResidueCharacter = IntVec;

struct TorusPair {
  Coweight lambda;
  ResidueCharacter chi;
  auto operator<=>(const TorusPair&) const = default;
};

std::string to_string(const TorusPair& p);

/// All (q-1)^rank characters in lexicographic order. Only depth n = 1.
std::vector<ResidueCharacter> enumerate_characters(const RootDatum& datum, std::int64_t q, int depth = 1);

/// (w lambda, chi o w^{-1}).
TorusPair weyl_act_pair(const WeylElement& w, const TorusPair& p, std::int64_t q);

struct OrbitSum {
  std::vector<TorusPair> orbit;  // sorted; the first entry is the representative
  const TorusPair& representative() const { return orbit.front(); }
};

struct TruncatedSpace {
  std::vector<OrbitSum> orbits;  // sorted by representative
  bool box_stable = false;       // the sup-norm box is W_0-stable
  std::size_t pair_count = 0;    // pairs in the union of the orbits
};

/// All W_0-orbits meeting {|lambda|_inf <= R} x characters. Orbits are
/// always complete; when the box is not W_0-stable they may leave it.
TruncatedSpace orbits(const WeylGroup& group, std::int64_t q, std::int64_t radius);

/// Indices into `group` of W_chi = {w : w.chi = chi}.
std::vector<std::size_t> stabilizer_wchi(const WeylGroup& group, const ResidueCharacter& chi, std::int64_t q);

struct RocReport {
  bool passed = false;
  std::size_t blocks = 0;
  std::vector<std::string> witnesses;  // one per failed condition
};

/// Splits an orbit by character and checks O = disjoint union of the
/// O_chi' = W_chi'-orbits, the formal identity z_O = sum z_{O_chi'}, and
/// W_chi'-invariance of each block.
RocReport roc_decomposition_check(const WeylGroup& group, std::int64_t q, const OrbitSum& orbit);

struct InvariantDimension {
  std::size_t orbit_count = 0;
  std::size_t kernel_dimension = 0;  // dim of the common kernel of (s_i - 1)
  Rational burnside;                 // (1/|W|) sum |Fix(w)|
  bool agree() const { return Rational(orbit_count) == burnside && orbit_count == kernel_dimension; }
};

InvariantDimension invariant_dimension(const WeylGroup& group, std::int64_t q, std::int64_t radius);

nlohmann::json to_json(const WeylGroup& group, std::int64_t q, const OrbitSum& orbit);

}  // namespace hck
