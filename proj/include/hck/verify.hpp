#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hck/apartment.hpp"
#include "hck/clifford.hpp"
#include "hck/padic_groups.hpp"

namespace hck {

/// The consecutive GL_n blocks joined by theta (simple root i links
/// coordinates i and i+1). Throws InputError for non-GL data.
Partition levi_partition(const RootDatum& datum, const Theta& theta);

/// One (theta, w2) pair from a MISMATCH, pushed through the bound matrices:
/// the Levi intersections of G_{x,r} and of n G_{x,r} n^{-1} = G_{w2 x, r}
/// compared block by block.
struct HeartEscalation {
  Theta theta;
  std::size_t w2 = 0;
  Partition blocks;
  IntMatrix at_x, at_w2x;
  std::vector<ConjugacyVerdict> per_block;
  ConjugacyVerdict verdict = ConjugacyVerdict::Inconclusive;
};

std::vector<HeartEscalation> escalate_mismatch(const WeylGroup& group, const ApartmentPoint& x, const Rational& r,
                                               const HeartVerdict& verdict);

struct PointCountCrossCheck {
  std::int64_t p = 0;
  std::uint64_t iwahori = 0, k1 = 0, i1 = 0;  // |. mod p^2| by full scan of M_2(Z/p^2)
  bool matches = false;                       // both ratios equal the symbolic indices at q = p
};

/// GL_3, x = e_1/2, r = 1, theta = {e_2 - e_3}, run end to end.
struct CounterexampleReport {
  IntMatrix g_x1, conjugate, k1, i1, iwahori;
  HeartVerdict heart;
  std::vector<HeartEscalation> escalations;
  QPoly index_k1, index_i1;
  std::vector<PointCountCrossCheck> cross_checks;
  ConjugacyVerdict obstruction = ConjugacyVerdict::Inconclusive;
  bool not_heart = false;
  std::string verdict;
};

CounterexampleReport counterexample();
nlohmann::json to_json(const CounterexampleReport& r);

/// Bound matrices expected for the counterexample, as printed with the
/// diagonal filled in by ceil(r).
struct ReferenceMatrices {
  IntMatrix g_x1, conjugate, k1, i1;
};
ReferenceMatrices reference_matrices();

struct SuiteResult {
  int criterion = 0;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // capped; `failures` has the full count
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;
};

inline constexpr int kCriteria = 7;

SuiteResult run_criterion(int criterion, std::size_t jobs);
nlohmann::json to_json(const SuiteResult& r, bool timing = true);

}  // namespace hck
