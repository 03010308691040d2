#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hck/finite_group.hpp"
#include "hck/representation.hpp"

namespace hck {

struct RestrictionDecomposition {
  std::size_t m = 0;
  std::vector<ClassFunction> orbit;  // pairwise distinct conjugates sigma^g
  Subgroup inertia;                  // Int(sigma) inside the big group
  bool decomposition_exact = false;  // Res = m * (sum over the orbit)
  bool dimension_identity = false;   // dim = |orbit| * m * dim sigma
};

/// Clifford decomposition of Res^{big}_{small} of an irreducible character,
/// relative to one irreducible constituent `sigma` of the restriction.
RestrictionDecomposition restrict_decompose(const FiniteGroup& g, const Subgroup& big, const Subgroup& small,
                                            const ClassFunction& sigma_tilde, const ClassFunction& sigma);

/// All linear characters of big/small, as exponents of zeta_M indexed by
/// the elements of g (meaningful on `big` only).
std::vector<std::vector<long>> quotient_characters(const FiniteGroup& g, const Subgroup& big, const Subgroup& small,
                                                   int conductor);

struct TwistGroup {
  std::vector<std::vector<long>> characters;  // the nu with sigma~ (x) nu = sigma~
  Subgroup dagger;                            // intersection of their kernels
  std::size_t quotient_order = 0;             // |X(big/small)|
};

TwistGroup twist_group(const FiniteGroup& g, const Subgroup& big, const Subgroup& small,
                       const ClassFunction& sigma_tilde);

struct StabilizerSearch {
  Subgroup s_h;
  std::size_t subgroups_scanned = 0;
  std::size_t maximal_candidates = 0;
  bool bicharacter_ok = false;  // alternating and bimultiplicative on Int/H
};

/// Maximal subgroups of Int/H on which the commutator pairing of the
/// projective action of Int on sigma is trivial, i.e. the maximal
/// subgroups to which sigma extends. Ties go to the lexicographically
/// smallest element list.
StabilizerSearch maximal_stabilizer(const FiniteGroup& g, const Subgroup& small, const Subgroup& inertia,
                                    const Representation& sigma);

struct DoubleCoset {
  Elem representative = 0;
  std::size_t size = 0;
  Rational hom_dimension;  // dim Hom_{J cap J^g}(rho, rho^g)
};

struct IntertwiningSet {
  std::vector<DoubleCoset> double_cosets;
  Subgroup support;  // union of the intertwining double cosets
};

IntertwiningSet intertwining_set(const FiniteGroup& g, const Subgroup& j, const ClassFunction& rho);

/// G, N normal with G/N abelian, J~ and rho~ irreducible on J~; J = J~ cap N.
struct CliffordModel {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const CyclotomicField> field;
  Subgroup normal;
  Representation rho_tilde;
  /// An irreducible constituent of Res_J rho~. When absent, Res_J rho~
  /// itself is used and must be irreducible.
  std::optional<Representation> rho;
  std::string skip_note;  // free text carried into the report
};

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CliffordReport {
  std::string name;
  std::size_t group_order = 0, normal_order = 0, j_tilde_order = 0, j_order = 0;
  std::size_t dim_rho_tilde = 0, dim_rho = 0;

  std::size_t m = 0, orbit_size = 0;
  Subgroup inertia, s_h, dagger;
  std::size_t twist_group_order = 0;
  bool genclif_dimension = false, genclif_decomposition = false;
  bool clifbis_chain = false;  // dagger <= sH <= Int, [Int:sH] = [sH:dagger] = m
  bool clifbis_twist = false;  // |X| = [J~ : dagger]
  bool bicharacter_ok = false;
  bool frobenius = false;

  bool pi_irreducible = false, intertwining_in_j_tilde = false;
  std::size_t intertwining_double_cosets = 0, double_cosets = 0;
  std::string hypothesis_failure;

  CheckStatus transfer = CheckStatus::Skipped;
  std::size_t m_normal_pi = 0;
  CheckStatus center = CheckStatus::Skipped;
  std::size_t constituents = 0, dagger_index = 0;
  CheckStatus commutativity = CheckStatus::Skipped;
  std::array<bool, 3> commutative{};
  Rational dim_end, dim_end_mackey;

  bool lemmas_hold() const;
  bool passed() const;
};

CliffordReport evaluate(const CliffordModel& model);
std::vector<CliffordReport> evaluate_catalog(const std::vector<CliffordModel>& models, std::size_t jobs);

std::vector<CliffordModel> builtin_catalog();
/// Catalog JSON; see docs in README for the format.
std::vector<CliffordModel> load_catalog(const nlohmann::json& doc);

nlohmann::json to_json(const CliffordReport& r);

}  // namespace hck
