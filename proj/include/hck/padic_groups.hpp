#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hck/apartment.hpp"
#include "hck/int_matrix.hpp"
#include "hck/qpoly.hpp"

namespace hck {

/// Bound value marking an entry that is identically zero (outside a Levi).
inline constexpr std::int64_t kForcedZero = std::numeric_limits<std::int64_t>::max() / 4;

/// A compact open subgroup of GL_n(F) cut out by valuation bounds.
///
/// Off-diagonal (i,j): v(g_ij) >= m_ij. Diagonal m_ii >= 1: g_ii in 1 + p^{m_ii} O.
/// Diagonal m_ii = 0: no condition on g_ii beyond g being invertible over O.
/// kForcedZero anywhere off the diagonal: g_ij = 0.
class ValuationGroupScheme {
 public:
  /// Validates nonnegativity and the closure inequalities; the error names (i,j,k).
  explicit ValuationGroupScheme(IntMatrix bounds);
  static ValuationGroupScheme from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t n() const { return bounds_.rows(); }
  const IntMatrix& bounds() const { return bounds_; }
  std::int64_t bound(std::size_t i, std::size_t j) const { return bounds_(i, j); }
  bool forced_zero(std::size_t i, std::size_t j) const { return bounds_(i, j) >= kForcedZero; }
  /// Largest finite bound, at least 1.
  std::int64_t max_bound() const;

  /// this contains other, judged entrywise.
  bool contains(const ValuationGroupScheme& other) const;
  bool operator==(const ValuationGroupScheme& o) const { return bounds_ == o.bounds_; }

  nlohmann::json to_json() const;
  std::string to_string() const;

 private:
  IntMatrix bounds_;
};

/// m_ij = threshold of e_i - e_j, m_ii = ceil(r).
ValuationGroupScheme from_filtration(const RootDatum& datum, const FiltrationProfile& profile);

/// bounds'_ij = m_{sigma(i) sigma(j)}, i.e. conjugation by the permutation matrix
/// n with n e_{sigma(i)} = e_i. sigma is 0-based.
ValuationGroupScheme conjugate_by_permutation(const ValuationGroupScheme& k, const std::vector<std::size_t>& sigma);

/// Consecutive blocks given by their sizes, e.g. {1,2} for GL_1 x GL_2.
using Partition = std::vector<std::size_t>;

/// Keeps in-block bounds, forces off-block entries to zero.
ValuationGroupScheme intersect_levi(const ValuationGroupScheme& k, const Partition& blocks);

/// The GL_b block of a Levi intersection as its own group.
ValuationGroupScheme levi_block(const ValuationGroupScheme& k, const Partition& blocks, std::size_t block);

/// |K mod p^N| as a polynomial in q = |O/p|. Requires N >= max_bound().
QPoly point_count(const ValuationGroupScheme& k, std::int64_t level);

/// |GL_b(F_q)|.
QPoly gl_order(std::size_t b);

/// [A : B] for B inside A, checked independent of the level at N and N+1.
QPoly group_index(const ValuationGroupScheme& a, const ValuationGroupScheme& b);

/// vol(K) / vol(ref) as a ratio of point counts at a common level.
struct VolumeExponent {
  QPoly numerator;
  QPoly denominator;
  /// Exact log_q of the ratio when it is a signed power of q, else nullopt.
  std::optional<std::int64_t> logq() const;
  bool operator==(const VolumeExponent& o) const {
    return numerator * o.denominator == o.numerator * denominator;
  }
  std::string to_string() const;
};

/// vol(K) normalized by vol(reference) = 1. Verifies the ratio is the same at N and N+1.
VolumeExponent log_volume(const ValuationGroupScheme& k, const ValuationGroupScheme& reference);

enum class ConjugacyVerdict { DistinctVolume, Inconclusive };
std::string to_string(ConjugacyVerdict v);

/// DISTINCT_VOLUME proves non-conjugacy in GL_n(F); equal volumes prove nothing.
ConjugacyVerdict conjugacy_obstruction(const ValuationGroupScheme& a, const ValuationGroupScheme& b);

// ---- brute force over Z/p^N -------------------------------------------------

/// Residue-ring matrices are stored row-major with entries in [0, p^N).
using ResidueMatrix = std::vector<std::int64_t>;

bool contains_residue(const ValuationGroupScheme& k, const ResidueMatrix& g, std::int64_t p, std::int64_t level);

/// Counts K mod p^N by scanning all of M_n(Z/p^N); refuses more than `cap` matrices.
std::uint64_t brute_force_count_full(const ValuationGroupScheme& k, std::int64_t p, std::int64_t level,
                                     std::uint64_t cap = 50'000'000);

/// Counts K mod p^N by scanning the entrywise-allowed residues only.
std::uint64_t brute_force_count(const ValuationGroupScheme& k, std::int64_t p, std::int64_t level,
                                std::uint64_t cap = 50'000'000);

enum class SignConvention { LowerOpposite, UpperOpposite };

struct FactorizationReport {
  bool analytic = false;         // |K| = |K n N^-| |K n M| |K n N|
  std::optional<bool> exhaustive;  // every element factors inside K; nullopt when capped
  std::int64_t p = 0;
  std::int64_t level = 0;        // the N actually enumerated
  std::uint64_t elements = 0;
  std::string status;            // PASS, FAIL, UNVERIFIED_EXHAUSTIVELY
  bool passed() const { return status == "PASS"; }
};

/// Iwahori factorization K = (K n N^-)(K n M)(K n N) for the standard parabolic with
/// the given consecutive blocks. The exhaustive part runs over K mod p^N with
/// N = max_bound + 1, dropping to N = max_bound when that exceeds `cap`; bound
/// conditions are all decided modulo p^{max_bound}, so that level is still exact.
FactorizationReport iwahori_factorization_check(const ValuationGroupScheme& k, const Partition& blocks,
                                                SignConvention sign, std::int64_t p,
                                                std::uint64_t cap = 20'000'000, std::size_t jobs = 1);

/// The three pieces of an Iwahori factorization as bound matrices.
ValuationGroupScheme lower_part(const ValuationGroupScheme& k, const Partition& blocks);
ValuationGroupScheme upper_part(const ValuationGroupScheme& k, const Partition& blocks);

/// Searches GL_n(Z/p^N) for g with g A g^{-1} = B modulo p^N. A hit is evidence
/// of conjugacy at that level only; a miss says nothing about conjugacy over F.
struct ConjugatorSearch {
  bool exhausted = false;
  std::optional<ResidueMatrix> conjugator;
  std::uint64_t tried = 0;
};
ConjugatorSearch conjugator_search(const ValuationGroupScheme& a, const ValuationGroupScheme& b, std::int64_t p,
                                   std::int64_t level, std::uint64_t cap = 2'000'000);

}  // namespace hck
