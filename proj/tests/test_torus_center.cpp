#include <doctest.h>

#include "hck/error.hpp"
#include "hck/torus_center.hpp"

using namespace hck;

TEST_CASE("enumerate_characters") {
  const auto gl2 = RootDatum::parse("gl2");
  CHECK(enumerate_characters(gl2, 3).size() == 4);
  CHECK(enumerate_characters(RootDatum::parse("gl1"), 5).size() == 4);
  CHECK(enumerate_characters(RootDatum::parse("gl3"), 2) == std::vector<ResidueCharacter>{{0, 0, 0}});
  const auto c4 = enumerate_characters(gl2, 4);
  CHECK(c4.size() == 9);
  CHECK(std::is_sorted(c4.begin(), c4.end()));
  CHECK_THROWS_AS(enumerate_characters(gl2, 6), InputError);
  CHECK_THROWS_AS(enumerate_characters(gl2, 3, 2), InputError);
  CHECK(is_prime_power(9));
  CHECK(is_prime_power(2));
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("weyl_act_pair is a left action") {
  const WeylGroup gl2(RootDatum::parse("gl2"));
  const auto& s = gl2[gl2.times_simple(0, 0)];
  CHECK(weyl_act_pair(gl2[0], {{1, 0}, {1, 0}}, 3) == TorusPair{{1, 0}, {1, 0}});
  CHECK(weyl_act_pair(s, {{1, 0}, {1, 0}}, 3) == TorusPair{{0, 1}, {0, 1}});

  for (const char* spec : {"gl3", "b2", "a2"}) {
    const WeylGroup g(RootDatum::parse(spec));
    const std::size_t rank = g.datum().rank();
    TorusPair p{Coweight(rank, 0), ResidueCharacter(rank, 0)};
    for (std::size_t i = 0; i < rank; ++i) {
      p.lambda[i] = static_cast<std::int64_t>(i) - 1;
      p.chi[i] = static_cast<std::int64_t>(i % 4);
    }
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        CHECK(weyl_act_pair(g[g.multiply(a, b)], p, 5) == weyl_act_pair(g[a], weyl_act_pair(g[b], p, 5), 5));
  }
}

TEST_CASE("orbits and stabilizers") {
  const WeylGroup gl2(RootDatum::parse("gl2"));
  const auto sp = orbits(gl2, 3, 1);
  CHECK(sp.box_stable);
  CHECK(sp.orbits.size() == 21);
  CHECK(sp.orbits.front().orbit == std::vector<TorusPair>{{{-1, -1}, {0, 0}}});
  bool found_zero = false, found_pair = false;
  for (const auto& o : sp.orbits) {
    if (o.representative() == TorusPair{{0, 0}, {0, 0}}) found_zero = o.orbit.size() == 1;
    if (o.representative() == TorusPair{{0, 1}, {0, 1}}) found_pair = o.orbit.size() == 2;
  }
  CHECK(found_zero);
  CHECK(found_pair);

  CHECK(stabilizer_wchi(gl2, {0, 0}, 3).size() == 2);
  CHECK(stabilizer_wchi(gl2, {1, 1}, 3).size() == 2);
  CHECK(stabilizer_wchi(gl2, {0, 1}, 3).size() == 1);

  // Adjoint B_2 uses fundamental-coweight coordinates, where the box is not W_0-stable.
  const WeylGroup b2(RootDatum::parse("b2"));
  const auto bsp = orbits(b2, 2, 1);
  CHECK_FALSE(bsp.box_stable);
  std::size_t total = 0;
  for (const auto& o : bsp.orbits) total += o.orbit.size();
  CHECK(total == bsp.pair_count);
}

TEST_CASE("roc_decomposition_check") {
  const WeylGroup gl2(RootDatum::parse("gl2"));
  for (std::int64_t q : {2, 3, 4})
    for (std::int64_t r : {0, 1, 2})
      for (const auto& o : orbits(gl2, q, r).orbits) {
        const auto rep = roc_decomposition_check(gl2, q, o);
        INFO(to_string(o.representative()));
        CHECK(rep.passed);
      }
  const auto single = roc_decomposition_check(gl2, 3, OrbitSum{{TorusPair{{0, 0}, {0, 0}}}});
  CHECK(single.passed);
  CHECK(single.blocks == 1);
  // ((1,0),(0,1)) and ((0,1),(1,0)): two characters, one block each
  const auto split = roc_decomposition_check(gl2, 3, OrbitSum{{TorusPair{{0, 1}, {1, 0}}, TorusPair{{1, 0}, {0, 1}}}});
  CHECK(split.passed);
  CHECK(split.blocks == 2);
  CHECK_THROWS_AS(roc_decomposition_check(gl2, 3, OrbitSum{{TorusPair{{1, 0}, {0, 0}}}}), InputError);

  const WeylGroup gl3(RootDatum::parse("gl3"));
  for (const auto& o : orbits(gl3, 2, 1).orbits) CHECK(roc_decomposition_check(gl3, 2, o).passed);
}

TEST_CASE("invariant_dimension three ways") {
  const WeylGroup gl2(RootDatum::parse("gl2"));
  const auto zero = invariant_dimension(gl2, 2, 0);
  CHECK(zero.orbit_count == 1);
  CHECK(zero.agree());

  const auto d = invariant_dimension(gl2, 3, 1);
  CHECK(d.orbit_count == 21);
  CHECK(d.kernel_dimension == 21);
  CHECK(d.burnside == 21);
  CHECK(invariant_dimension(gl2, 3, 2).orbit_count == 55);

  const WeylGroup a1(RootDatum::parse("a1"));
  const auto a = invariant_dimension(a1, 2, 2);
  CHECK(a.orbit_count == 3);
  CHECK(a.agree());

  for (std::int64_t q : {2, 3, 4})
    for (std::int64_t r : {0, 1, 2}) CHECK(invariant_dimension(gl2, q, r).agree());
  CHECK(invariant_dimension(WeylGroup(RootDatum::parse("b2")), 3, 1).agree());
}
