#include <doctest.h>

#include <set>

#include "hck/error.hpp"
#include "hck/root_datum.hpp"
#include "hck/weyl.hpp"

using namespace hck;

namespace {

// Closure of the simple reflection matrices under multiplication, computed
// without the library's BFS tables.
std::size_t brute_force_weyl_order(const RootDatum& d) {
  std::set<IntMatrix> seen{IntMatrix::identity(d.rank())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntMatrix> current(seen.begin(), seen.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (seen.insert(a * b).second) grew = true;
    for (const auto& a : current)
      for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
        if (seen.insert(a * d.simple_reflection(i)).second) grew = true;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("build_root_datum: named types") {
  auto a1 = RootDatum::parse("a1");
  CHECK(a1.roots().size() == 2);
  CHECK(WeylGroup(a1).size() == 2);

  auto a2 = RootDatum::parse("a2");
  CHECK(a2.roots().size() == 6);
  CHECK(WeylGroup(a2).size() == 6);

  auto gl3 = RootDatum::parse("gl3");
  CHECK(gl3.rank() == 3);
  CHECK(gl3.roots().size() == 6);
  for (const auto& r : gl3.roots()) {
    int plus = 0, minus = 0;
    for (auto c : r.character) {
      if (c == 1) ++plus;
      if (c == -1) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }

  CHECK(RootDatum::parse("g2").roots().size() == 12);
  CHECK(RootDatum::parse("b3").roots().size() == 18);
  CHECK(RootDatum::parse("d4").roots().size() == 24);
}

TEST_CASE("build_root_datum: JSON forms") {
  auto gl3 = RootDatum::from_json(nlohmann::json::parse(R"({"type": "A", "n": 2, "central_rank": 1})"));
  CHECK(gl3.is_general_linear());
  CHECK(gl3.rank() == 3);
  auto a2 = RootDatum::from_json(nlohmann::json::parse(R"({"cartan": [[2,-1],[-1,2]], "central_rank": 0})"));
  CHECK(a2.roots().size() == 6);
  auto b2z = RootDatum::from_json(nlohmann::json::parse(R"({"type": "B", "n": 2, "central_rank": 2})"));
  CHECK(b2z.rank() == 4);
  CHECK(b2z.central_rank() == 2);
  CHECK(WeylGroup(b2z).size() == 8);
}

TEST_CASE("build_root_datum: rejects invalid Cartan matrices with the offending entry") {
  auto expect_error = [](const char* json, const char* fragment) {
    try {
      RootDatum::from_json(nlohmann::json::parse(json));
      FAIL("expected rejection");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error(R"({"cartan": [[2,-4],[-1,2]]})", "entry (0,1) = -4");
  expect_error(R"({"cartan": [[2,1],[1,2]]})", "entry (0,1) = 1");
  expect_error(R"({"cartan": [[2,-2],[-2,2]]})", "affine");
  expect_error(R"({"cartan": [[2,-1.5],[-1,2]]})", "entry (0,1)");
  expect_error(R"({"cartan": [[3,-1],[-1,2]]})", "entry (0,0) = 3");
  // Affine A_2^(1) passes the pairwise test but has infinitely many roots.
  expect_error(R"({"cartan": [[2,-1,-1],[-1,2,-1],[-1,-1,2]]})", "not of finite type");
}

TEST_CASE("root datum invariants") {
  for (auto name : {"a1", "a2", "b2", "c3", "g2", "gl3", "a1xa1", "d4"}) {
    auto d = RootDatum::parse(name);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < d.roots().size(); ++i) {
      const auto& r = d.root(i);
      CHECK(d.pairing(r.character, r.coroot) == 2);
      if (r.positive) ++pos;
      CHECK(d.root(d.negative_of(i)).positive != r.positive);
    }
    CHECK(2 * pos == d.roots().size());
  }
}

TEST_CASE("reflect") {
  auto a1 = RootDatum::parse("a1");
  const auto& alpha = a1.root(a1.simple_roots()[0]);
  CHECK(a1.reflect(0, alpha.coroot) == negate(alpha.coroot));

  auto gl3 = RootDatum::parse("gl3");
  auto e12 = *gl3.find_root(IntVec{1, -1, 0});
  CHECK(gl3.reflect(e12, IntVec{1, 0, 0}) == IntVec{0, 1, 0});

  auto a2 = RootDatum::parse("a2");
  CHECK(a2.reflect(0, IntVec{0, 0}) == IntVec{0, 0});

  // Involution and pairing preservation.
  for (auto name : {"a2", "b2", "g2", "gl3"}) {
    auto d = RootDatum::parse(name);
    WeylGroup w(d);
    for (std::size_t i = 0; i < d.roots().size(); ++i) {
      Coweight lam(d.rank(), 0);
      for (std::size_t k = 0; k < d.rank(); ++k) lam[k] = static_cast<std::int64_t>(k * 2) - 1;
      CHECK(d.reflect(i, d.reflect(i, lam)) == lam);
    }
    for (const auto& e : w.elements())
      for (const auto& r : d.roots()) {
        Coweight lam(d.rank(), 0);
        lam[0] = 2;
        lam.back() -= 1;
        CHECK(d.pairing(e.apply_to_character(r.character), e.apply(lam)) == d.pairing(r.character, lam));
      }
  }
}

TEST_CASE("enumerate_weyl") {
  CHECK(enumerate_weyl(RootDatum::parse("a2")).size() == 6);
  CHECK(enumerate_weyl(RootDatum::parse("a1xa1")).size() == 4);
  auto b2 = RootDatum::parse("b2");
  CHECK(brute_force_weyl_order(b2) == 8);
  CHECK(enumerate_weyl(b2).size() == 8);
  CHECK(enumerate_weyl(RootDatum::parse("g2")).size() == brute_force_weyl_order(RootDatum::parse("g2")));
  CHECK(enumerate_weyl(RootDatum::parse("f4")).size() == 1152);
  CHECK_THROWS_AS(WeylGroup(RootDatum::parse("a4"), 100), CapExceeded);

  // Each element's action equals the product of its word's reflections.
  auto d = RootDatum::parse("b3");
  for (const auto& e : enumerate_weyl(d)) {
    IntMatrix m = IntMatrix::identity(d.rank());
    for (auto s : e.word) m = m * d.simple_reflection(s);
    CHECK(m == e.action);
    CHECK(e.action * e.dual_action.transpose() == IntMatrix::identity(d.rank()));
  }
}

TEST_CASE("coset_decompose") {
  auto a2 = RootDatum::parse("a2");
  WeylGroup w(a2);
  const std::size_t s1 = w.times_simple(0, 0), s2 = w.times_simple(0, 1);
  std::vector<std::size_t> theta{1};
  CHECK(coset_decompose(w, s2, theta) == std::pair<std::size_t, std::size_t>{s2, 0});
  CHECK(coset_decompose(w, s1, theta) == std::pair<std::size_t, std::size_t>{0, s1});
  std::vector<std::size_t> all{0, 1};
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(coset_decompose(w, i, all) == std::pair<std::size_t, std::size_t>{i, 0});
}

TEST_CASE("coset_decompose: product and positivity for every w and theta, rank <= 3") {
  for (auto name : {"a1", "a2", "b2", "g2", "gl3", "a3", "b3", "c3", "a1xa1"}) {
    auto d = RootDatum::parse(name);
    WeylGroup w(d);
    const std::size_t ss = d.semisimple_rank();
    for (std::size_t mask = 0; mask < (1u << ss); ++mask) {
      std::vector<std::size_t> theta;
      for (std::size_t i = 0; i < ss; ++i)
        if (mask & (1u << i)) theta.push_back(i);
      auto wtheta = w.parabolic(theta);
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto [w1, w2] = coset_decompose(w, i, theta);
        CHECK(w[w1].action * w[w2].action == w[i].action);
        CHECK(std::find(wtheta.begin(), wtheta.end(), w1) != wtheta.end());
        for (auto t : theta) {
          auto img = w[w.inverse(w2)].apply_to_character(d.root(d.simple_roots()[t]).character);
          CHECK(d.root(*d.find_root(img)).positive);
        }
      }
    }
  }
}

TEST_CASE("weyl_orbit") {
  auto a1 = RootDatum::parse("a1");
  auto cv = a1.root(a1.simple_roots()[0]).coroot;
  CHECK(weyl_orbit(a1, cv) == std::vector<Coweight>{negate(cv), cv});

  auto gl3 = RootDatum::parse("gl3");
  CHECK(weyl_orbit(gl3, {1, 0, 0}) == std::vector<Coweight>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(weyl_orbit(RootDatum::parse("a2"), {0, 0}) == std::vector<Coweight>{{0, 0}});
}

TEST_CASE("orbit-stabilizer on the box [-3,3]^rank") {
  for (auto name : {"a1", "a2", "b2", "g2", "gl2", "gl3"}) {
    auto d = RootDatum::parse(name);
    WeylGroup w(d);
    const std::size_t n = d.rank();
    Coweight lam(n, -3);
    while (true) {
      CHECK(weyl_orbit(d, lam).size() * stabilizer_order(w, lam) == w.size());
      std::size_t k = 0;
      while (k < n && lam[k] == 3) lam[k++] = -3;
      if (k == n) break;
      ++lam[k];
    }
  }
}
