#include <doctest.h>

#include <fstream>

#include "hck/clifford.hpp"
#include "hck/error.hpp"

using namespace hck;

namespace {

using FieldPtr = std::shared_ptr<const CyclotomicField>;

FieldPtr field(int m) { return std::make_shared<CyclotomicField>(m); }

CycMatrix diag2(const FieldPtr& f, long a, long b) {
  CycMatrix m(f, 2);
  m(0, 0) = Cyc::root_of_unity(f, a);
  m(1, 1) = Cyc::root_of_unity(f, b);
  return m;
}

CycMatrix anti2(const FieldPtr& f, long a, long b) {
  CycMatrix m(f, 2);
  m(0, 1) = Cyc::root_of_unity(f, a);
  m(1, 0) = Cyc::root_of_unity(f, b);
  return m;
}

Subgroup everything(const FiniteGroup& g) {
  Subgroup s(g.order());
  for (Elem x = 0; x < g.order(); ++x) s[x] = x;
  return s;
}

struct Dihedral8 {
  FieldPtr f = field(4);
  FiniteGroup g = FiniteGroup::from_matrices({diag2(f, 1, 3), anti2(f, 0, 0)});
  Representation two = Representation::from_generators(g, f, g.generators(), {diag2(f, 1, 3), anti2(f, 0, 0)});
  Subgroup c4 = generate(g, {g.generators()[0]});
};

struct Quaternion8 {
  FieldPtr f = field(4);
  FiniteGroup g = FiniteGroup::from_matrices({diag2(f, 1, 3), anti2(f, 0, 2)});
  Representation two = Representation::from_generators(g, f, g.generators(), {diag2(f, 1, 3), anti2(f, 0, 2)});
  Subgroup center = generate(g, {g.word({0, 0})});
};

const CliffordReport& find(const std::vector<CliffordReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  FAIL("no catalog entry " << name);
  return rs.front();
}

}  // namespace

TEST_CASE("cyclotomic arithmetic is exact") {
  auto f = field(84);
  CHECK(f->degree() == 24);
  CHECK(field(12)->degree() == 4);
  const Cyc z = Cyc::root_of_unity(f, 1);
  Cyc p = Cyc(f, Rational(1));
  for (int k = 0; k < 84; ++k) p = p * z;
  CHECK(p == Cyc(f, Rational(1)));
  // 1 + w + w^2 = 0 for a primitive cube root w
  const Cyc w = Cyc::root_of_unity(f, 28);
  CHECK((Cyc(f, Rational(1)) + w + w * w).is_zero());
  CHECK((z * z.conj()) == Cyc(f, Rational(1)));
  CHECK(Cyc::root_of_unity(f, 42) == Cyc(f, Rational(-1)));
  // zeta_8 + zeta_8^{-1} = sqrt 2 squares to 2
  auto f8 = field(8);
  const Cyc s = Cyc::root_of_unity(f8, 1) + Cyc::root_of_unity(f8, 7);
  CHECK((s * s) == Cyc(f8, Rational(2)));
  CHECK_FALSE(s.is_rational());
  CHECK_THROWS_AS(s.rational_value(), InternalError);
  CHECK(Cyc::from_powers(f8, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}) ==
        Cyc(f8, Rational(-1)));
}

TEST_CASE("finite groups from generators and tables") {
  CHECK(FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}).order() == 6);
  Dihedral8 d8;
  CHECK(d8.g.order() == 8);
  CHECK(d8.g.exponent() == 4);
  CHECK(d8.c4.size() == 4);
  CHECK(is_normal_in(d8.g, d8.c4, everything(d8.g)));
  CHECK(quotient_is_abelian(d8.g, everything(d8.g), d8.c4));
  Quaternion8 q8;
  CHECK(q8.g.order() == 8);
  CHECK(q8.center.size() == 2);

  const auto prod = FiniteGroup::direct_product(q8.g, FiniteGroup::from_permutations({{1, 2, 0}}));
  CHECK(prod.order() == 24);
  CHECK(prod.exponent() == 12);
  CHECK(prod.generators().size() == 3);

  // non-associative Latin square (a loop of order 5)
  const std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}, 512),
                  CapExceeded);
}

TEST_CASE("representations must respect the relations") {
  Dihedral8 d8;
  CHECK(d8.two.degree() == 2);
  CHECK(inner_product(d8.two.character(), d8.two.character()) == 1);
  // s -> identity, r -> diag(i,-i) is not a homomorphism of D8
  CHECK_THROWS_AS(Representation::from_generators(d8.g, d8.f, d8.g.generators(),
                                                  {diag2(d8.f, 1, 3), CycMatrix::identity(d8.f, 2)}),
                  InputError);
  // the first coordinate is not invariant under the reflections
  CHECK_THROWS_AS(d8.two.sub_block(everything(d8.g), 1), InputError);
  CHECK(d8.two.sub_block(d8.c4, 1).degree() == 1);
}

TEST_CASE("restrict_decompose examples") {
  Dihedral8 d8;
  const auto all = everything(d8.g);
  const auto& chi = d8.two.character();

  auto same = restrict_decompose(d8.g, all, all, chi, chi);
  CHECK(same.m == 1);
  CHECK(same.orbit.size() == 1);

  auto r = restrict_decompose(d8.g, all, d8.c4, chi, d8.two.sub_block(d8.c4, 1).character());
  CHECK(r.m == 1);
  CHECK(r.orbit.size() == 2);
  CHECK(r.dimension_identity);
  CHECK(r.decomposition_exact);
  CHECK(r.inertia == d8.c4);

  Quaternion8 q8;
  auto z = restrict_decompose(q8.g, everything(q8.g), q8.center, q8.two.character(),
                              q8.two.sub_block(q8.center, 1).character());
  CHECK(z.m == 2);
  CHECK(z.orbit.size() == 1);
  CHECK(z.dimension_identity);

  // the regular character is reducible
  ClassFunction reg = induce(d8.g, restrict_to(chi, {0}), all);
  reg = scale(reg, Rational(1, 2));
  CHECK_THROWS_AS(restrict_decompose(d8.g, all, d8.c4, reg, reg), InputError);
}

TEST_CASE("twist_group examples") {
  Dihedral8 d8;
  const auto all = everything(d8.g);
  const auto& chi = d8.two.character();

  auto trivial = twist_group(d8.g, all, all, chi);
  CHECK(trivial.characters.size() == 1);
  CHECK(trivial.dagger == all);

  auto c4 = twist_group(d8.g, all, d8.c4, chi);
  CHECK(c4.characters.size() == 2);
  CHECK(c4.quotient_order == 2);
  CHECK(c4.dagger == d8.c4);

  // a 1-dimensional character is never fixed by a nontrivial twist
  const auto lin = Representation::from_generators(
      d8.g, d8.f, d8.g.generators(), {CycMatrix::identity(d8.f, 1) * Cyc(d8.f, Rational(-1)), CycMatrix::identity(d8.f, 1)});
  auto one = twist_group(d8.g, all, d8.c4, lin.character());
  CHECK(one.characters.size() == 1);
  CHECK(one.dagger == all);

  auto s3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}});
  auto f6 = field(6);
  const auto triv = Representation::from_generators(s3, f6, s3.generators(),
                                                    {CycMatrix::identity(f6, 1), CycMatrix::identity(f6, 1)});
  CHECK_THROWS_AS(twist_group(s3, everything(s3), {0}, triv.character()), InputError);
}

TEST_CASE("intertwining sets") {
  Dihedral8 d8;
  const auto rho = d8.two.sub_block(d8.c4, 1).character();
  const auto is = intertwining_set(d8.g, d8.c4, rho);
  CHECK(is.double_cosets.size() == 2);
  CHECK(is.double_cosets.front().representative == 0);
  CHECK(is.double_cosets.front().hom_dimension == 1);
  CHECK(is.support == d8.c4);

  const auto triv = Representation::from_generators(d8.g, d8.f, {d8.g.generators()[0]}, {CycMatrix::identity(d8.f, 1)});
  CHECK(intertwining_set(d8.g, d8.c4, triv.character()).support == everything(d8.g));
}

TEST_CASE("maximal stabilizer for Q8 over its center") {
  Quaternion8 q8;
  const auto rho = q8.two.sub_block(q8.center, 1);
  const auto st = maximal_stabilizer(q8.g, q8.center, everything(q8.g), rho);
  CHECK(st.bicharacter_ok);
  CHECK(st.subgroups_scanned == 5);     // subgroups of C2 x C2
  CHECK(st.maximal_candidates == 3);    // the three cyclic subgroups of order 4
  CHECK(st.s_h.size() == 4);
}

TEST_CASE("builtin catalog") {
  const auto models = builtin_catalog();
  REQUIRE(models.size() >= 12);
  const auto reports = evaluate_catalog(models, 1);
  std::size_t verified = 0;
  for (const auto& r : reports) {
    INFO(r.name);
    CHECK(r.group_order <= 512);
    CHECK(r.genclif_dimension);
    CHECK(r.genclif_decomposition);
    CHECK(r.clifbis_chain);
    CHECK(r.clifbis_twist);
    CHECK(r.frobenius);
    CHECK(r.passed());
    if (r.hypothesis_failure.empty()) {
      ++verified;
      CHECK(r.transfer == CheckStatus::Pass);
      CHECK(r.center == CheckStatus::Pass);
      CHECK(r.commutativity == CheckStatus::Pass);
      CHECK(r.commutative[0] == r.commutative[1]);
      CHECK(r.commutative[1] == r.commutative[2]);
      CHECK(r.commutative[0] == (r.m == 1));
    }
  }
  CHECK(verified >= 12);

  const auto& q8 = find(reports, "Q8, N = center");
  CHECK(q8.m == 2);
  CHECK(q8.twist_group_order == 4);
  CHECK(q8.s_h.size() == 4);
  CHECK(q8.commutative == std::array<bool, 3>{false, false, false});

  const auto& heis = find(reports, "Heisenberg mod 3, N = center");
  CHECK(heis.m == 3);
  CHECK(heis.s_h.size() == 9);

  const auto& pauli = find(reports, "Pauli group on 2 qubits, N = center");
  CHECK(pauli.m == 4);
  CHECK(pauli.twist_group_order == 16);
  CHECK(pauli.s_h.size() == 8);

  const auto& mixed = find(reports, "Q8 x F21, N = Z(Q8) x C7, J~ = Q8 x C7");
  CHECK(mixed.group_order == 168);
  CHECK(mixed.m_normal_pi == 2);

  const auto& d16 = find(reports, "D16, N = D8, J~ = C8");
  CHECK(d16.constituents == 2);
  CHECK(d16.dagger_index == 2);

  const auto& skipped = find(reports, "Q8 x C3, N = Z(Q8) x C3, J~ = Q8");
  CHECK(skipped.transfer == CheckStatus::Skipped);
  CHECK_FALSE(skipped.intertwining_in_j_tilde);
  CHECK(skipped.hypothesis_failure.find("reducible") != std::string::npos);

  const auto& triv = find(reports, "S3, N = J~ = G, trivial");
  CHECK(triv.commutative == std::array<bool, 3>{true, true, true});

  const auto parallel = evaluate_catalog(models, 4);
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(to_json(parallel[i]) == to_json(reports[i]));
}

TEST_CASE("JSON catalog") {
  std::ifstream in(HCK_DATA_DIR "/clifford_catalog.json");
  REQUIRE(in);
  const auto models = load_catalog(nlohmann::json::parse(in));
  REQUIRE(models.size() == 3);
  const auto reports = evaluate_catalog(models, 1);
  for (const auto& r : reports) {
    INFO(r.name);
    CHECK(r.passed());
  }
  CHECK(reports[0].orbit_size == 2);
  CHECK(reports[1].m == 2);
  CHECK(reports[2].center == CheckStatus::Pass);
  CHECK(reports[2].dagger_index == 4);
  CHECK(reports[2].constituents == 4);

  CHECK_THROWS_AS(load_catalog(nlohmann::json::parse(R"({"entries":[{"group":{}}]})")), InputError);
  CHECK_THROWS_AS(load_catalog(nlohmann::json::parse(
                      R"({"entries":[{"group":{"permutations":[[1,0]]},"normal":"all",
                          "rho_tilde":{"generators":[1],"images":[[[1,1],[0,1]]]}}]})")),
                  InputError);
}
