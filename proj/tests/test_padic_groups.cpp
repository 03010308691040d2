#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hck/error.hpp"
#include "hck/padic_groups.hpp"

using namespace hck;

namespace {

ValuationGroupScheme vgs(std::vector<std::vector<std::int64_t>> rows) { return ValuationGroupScheme::from_rows(rows); }

const ValuationGroupScheme kGx1 = vgs({{1, 1, 1}, {2, 1, 1}, {2, 1, 1}});
const ValuationGroupScheme kConj = vgs({{1, 2, 1}, {1, 1, 1}, {1, 2, 1}});
const ValuationGroupScheme kK1 = vgs({{1, 1}, {1, 1}});
const ValuationGroupScheme kI1 = vgs({{1, 1}, {2, 1}});
const ValuationGroupScheme kI = vgs({{0, 0}, {1, 0}});

QPoly q() { return QPoly::q(); }
QPoly qm1() { return QPoly::q() - QPoly(1); }

}  // namespace

TEST_CASE("from_filtration") {
  auto gl3 = RootDatum::parse("gl3");
  auto x = ApartmentPoint::parse(gl3, "1/2,0,0");
  CHECK(from_filtration(gl3, filtration_profile(gl3, x, 1)) == kGx1);
  auto gl2 = RootDatum::parse("gl2");
  CHECK(from_filtration(gl2, filtration_profile(gl2, ApartmentPoint::parse(gl2, "1/2,0"), 1)) == kI1);
  for (std::size_t n : {2, 3, 4}) {
    auto d = RootDatum::general_linear(n);
    auto k = from_filtration(d, filtration_profile(d, ApartmentPoint::origin(d), 1));
    for (auto v : k.bounds().data()) CHECK(v == 1);
  }
  CHECK_THROWS_AS(from_filtration(RootDatum::parse("a2"), filtration_profile(RootDatum::parse("a2"),
                                                                            ApartmentPoint::parse(RootDatum::parse("a2"), "0,0"), 1)),
                  InputError);
}

TEST_CASE("closure is validated with the offending triple") {
  try {
    vgs({{0, 2, 0}, {0, 0, 0}, {0, 0, 0}});
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(i,j,k) = (1,3,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(vgs({{2, 0}, {1, 1}}), InputError);  // m11 > m12 + m21
  CHECK_THROWS_AS(vgs({{1, -1}, {1, 1}}), InputError);
  CHECK_NOTHROW(kI);
}

TEST_CASE("conjugate_by_permutation") {
  CHECK(conjugate_by_permutation(kGx1, {1, 0, 2}) == kConj);
  CHECK(conjugate_by_permutation(kGx1, {0, 1, 2}) == kGx1);
  CHECK(conjugate_by_permutation(conjugate_by_permutation(kGx1, {1, 0, 2}), {1, 0, 2}) == kGx1);
  CHECK_THROWS_AS(conjugate_by_permutation(kGx1, {0, 0, 1}), InputError);

  // Cross-check against thresholds at w . x for every w in S_3.
  auto gl3 = RootDatum::parse("gl3");
  WeylGroup w(gl3);
  auto x = ApartmentPoint::parse(gl3, "1/2,1/3,0");
  auto k = from_filtration(gl3, filtration_profile(gl3, x, 1));
  for (const auto& e : w.elements()) {
    // e sends e_j to e_{pi(j)}; then (n K n^{-1})_{ij} = m_{pi^{-1}(i) pi^{-1}(j)}.
    std::vector<std::size_t> pinv(3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i)
        if (e.action(i, j) == 1) pinv[i] = j;
    CHECK(conjugate_by_permutation(k, pinv) == from_filtration(gl3, filtration_profile(gl3, act(e, x), 1)));
  }
}

TEST_CASE("intersect_levi") {
  auto m = intersect_levi(kGx1, {1, 2});
  CHECK(levi_block(kGx1, {1, 2}, 1) == kK1);
  CHECK(levi_block(kConj, {1, 2}, 1) == kI1);
  CHECK(m.forced_zero(0, 1));
  CHECK(m.forced_zero(2, 0));
  CHECK(m.bound(1, 2) == 1);
  CHECK(intersect_levi(kGx1, {3}) == kGx1);
  CHECK_THROWS_AS(intersect_levi(kGx1, {1, 1}), InputError);
}

TEST_CASE("point counts and indices") {
  CHECK(gl_order(2) == (q() * q() - QPoly(1)) * (q() * q() - q()));
  CHECK(group_index(kI, kK1) == q() * qm1() * qm1());
  CHECK(group_index(kI, kI1) == q() * q() * qm1() * qm1());
  CHECK(group_index(kK1, kI1) == q());
  CHECK(group_index(kGx1, kGx1) == QPoly(1));
  CHECK(group_index(kI, kK1).to_string() == "q*(q-1)^2");
  CHECK(group_index(kI, kI1).to_string() == "q^2*(q-1)^2");
  CHECK_THROWS_AS(group_index(kK1, kI), InputError);

  auto gl2o = vgs({{0, 0}, {0, 0}});
  CHECK(group_index(gl2o, kI) == q() + QPoly(1));
  auto gl3o = vgs({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  auto iw3 = vgs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
  // [GL_3(O) : I] = |flag variety| = (q^2+q+1)(q+1).
  CHECK(group_index(gl3o, iw3) == (q() * q() + q() + QPoly(1)) * (q() + QPoly(1)));
}

TEST_CASE("point counts agree with brute force in GL_2(Z/p^2)") {
  for (std::int64_t p : {2, 3}) {
    for (const auto& k : {kI, kK1, kI1, vgs({{0, 0}, {0, 0}}), vgs({{0, 1}, {1, 0}})}) {
      const auto full = brute_force_count_full(k, p, 2);
      CHECK(full == point_count(k, 2).evaluate(p).get_ui());
      CHECK(full == brute_force_count(k, p, 2));
    }
    CHECK(brute_force_count_full(kI, p, 2) / brute_force_count_full(kK1, p, 2) ==
          group_index(kI, kK1).evaluate(p).get_ui());
    CHECK(brute_force_count_full(kI, p, 2) / brute_force_count_full(kI1, p, 2) ==
          group_index(kI, kI1).evaluate(p).get_ui());
  }
  CHECK(brute_force_count_full(kI, 3, 2) == 2 * 2 * 3 * 81);
}

TEST_CASE("point counts of GL_3 groups agree with the entrywise scan") {
  for (std::int64_t p : {2, 3})
    for (const auto& k : {kGx1, kConj, vgs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}), vgs({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}})})
      CHECK(brute_force_count(k, p, k.max_bound()) == point_count(k, k.max_bound()).evaluate(p).get_ui());
}

TEST_CASE("log_volume") {
  CHECK(log_volume(kK1, kI).denominator == q() * qm1() * qm1());
  CHECK(log_volume(kI1, kI).denominator == q() * q() * qm1() * qm1());
  CHECK(log_volume(kK1, kK1).logq() == 0);
  CHECK(log_volume(kI1, kK1).logq() == -1);
  CHECK(log_volume(kK1, kI1).logq() == 1);
  CHECK_FALSE(log_volume(kK1, kI).logq().has_value());

  // Conjugation invariance over all of S_3 for several groups.
  std::vector<std::size_t> s{0, 1, 2};
  auto ref = vgs({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  for (const auto& k : {kGx1, kConj, vgs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}), vgs({{2, 1, 2}, {3, 2, 2}, {2, 1, 2}})}) {
    auto sigma = s;
    do {
      CHECK(log_volume(conjugate_by_permutation(k, sigma), ref) == log_volume(k, ref));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("conjugacy_obstruction") {
  CHECK(conjugacy_obstruction(kK1, kI1) == ConjugacyVerdict::DistinctVolume);
  CHECK(conjugacy_obstruction(kGx1, kConj) == ConjugacyVerdict::Inconclusive);
  CHECK(conjugacy_obstruction(kGx1, kGx1) == ConjugacyVerdict::Inconclusive);
  CHECK(conjugacy_obstruction(levi_block(kGx1, {1, 2}, 1), levi_block(kConj, {1, 2}, 1)) ==
        ConjugacyVerdict::DistinctVolume);
}

TEST_CASE("iwahori_factorization_check") {
  for (std::int64_t p : {2, 3}) {
    auto rep = iwahori_factorization_check(kGx1, {1, 2}, SignConvention::LowerOpposite, p);
    CHECK(rep.analytic);
    CHECK(rep.status == "PASS");
    auto i1 = iwahori_factorization_check(kI1, {1, 1}, SignConvention::LowerOpposite, p);
    CHECK(i1.status == "PASS");
    CHECK(i1.level == 3);
    CHECK(i1.elements == point_count(kI1, 3).evaluate(p).get_ui());
    CHECK(iwahori_factorization_check(kI1, {1, 1}, SignConvention::UpperOpposite, p).status == "PASS");
  }
  // GL_2(O) has no Iwahori factorization: w = [[0,1],[1,0]] has a singular pivot.
  auto gl2o = vgs({{0, 0}, {0, 0}});
  auto rep = iwahori_factorization_check(gl2o, {1, 1}, SignConvention::LowerOpposite, 2);
  CHECK_FALSE(rep.analytic);
  REQUIRE(rep.exhaustive.has_value());
  CHECK_FALSE(*rep.exhaustive);
  CHECK(rep.status == "FAIL");
  // With the whole group as the Levi the factorization is trivial.
  CHECK(iwahori_factorization_check(gl2o, {2}, SignConvention::LowerOpposite, 3).status == "PASS");
  // Falling back to N = max bound when N + 1 is too large.
  auto capped = iwahori_factorization_check(kGx1, {1, 2}, SignConvention::LowerOpposite, 3, 100'000);
  CHECK(capped.level == 2);
  CHECK(capped.status == "PASS");
  auto none = iwahori_factorization_check(kGx1, {1, 2}, SignConvention::LowerOpposite, 3, 10);
  CHECK(none.status == "UNVERIFIED_EXHAUSTIVELY");
}

TEST_CASE("conjugator_search is evidence only") {
  auto found = conjugator_search(kGx1, kConj, 2, 2);
  CHECK(found.exhausted);
  CHECK(found.conjugator.has_value());
  auto none = conjugator_search(kK1, kI1, 2, 2);
  CHECK(none.exhausted);
  CHECK_FALSE(none.conjugator.has_value());
}
