#include "hck/torus_center.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hck/error.hpp"
#include "hck/linalg.hpp"

namespace hck {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string vec_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool in_box(const Coweight& l, std::int64_t r) {
  return std::all_of(l.begin(), l.end(), [r](std::int64_t x) { return x >= -r && x <= r; });
}

std::vector<Coweight> box(std::size_t rank, std::int64_t r) {
  std::vector<Coweight> out;
  Coweight cur(rank, -r);
  if (rank == 0) return {Coweight{}};
  while (true) {
    out.push_back(cur);
    std::size_t k = rank;
    while (k > 0 && cur[k - 1] == r) cur[--k] = -r;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

// Simple reflections as Weyl elements.
std::vector<const WeylElement*> simple_elements(const WeylGroup& g) {
  std::vector<const WeylElement*> out;
  for (std::size_t i = 0; i < g.datum().semisimple_rank(); ++i) out.push_back(&g[g.times_simple(0, i)]);
  return out;
}

std::vector<TorusPair> orbit_of(const std::vector<const WeylElement*>& gens, const TorusPair& p, std::int64_t q) {
  std::set<TorusPair> seen{p};
  std::vector<TorusPair> queue{p};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto* s : gens) {
      TorusPair next = weyl_act_pair(*s, queue[i], q);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return {seen.begin(), seen.end()};
}

}  // namespace

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  return true;
}

std::string to_string(const TorusPair& p) { return "[" + vec_string(p.lambda) + ", chi=" + vec_string(p.chi) + "]"; }

std::vector<ResidueCharacter> enumerate_characters(const RootDatum& datum, std::int64_t q, int depth) {
  if (depth != 1) throw InputError("unsupported depth n = " + std::to_string(depth) + ": only n = 1 is implemented");
  if (!is_prime_power(q)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  std::vector<ResidueCharacter> out;
  ResidueCharacter cur(datum.rank(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == q - 2) cur[--k] = 0;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

TorusPair weyl_act_pair(const WeylElement& w, const TorusPair& p, std::int64_t q) {
  TorusPair r{w.apply(p.lambda), w.apply_to_character(p.chi)};
  for (auto& c : r.chi) c = mod(c, q - 1);
  return r;
}

TruncatedSpace orbits(const WeylGroup& group, std::int64_t q, std::int64_t radius) {
  if (radius < 0) throw InputError("radius must be >= 0");
  const auto chars = enumerate_characters(group.datum(), q);
  const auto lambdas = box(group.datum().rank(), radius);
  const auto gens = simple_elements(group);
  TruncatedSpace out;
  out.box_stable = true;
  for (const auto& l : lambdas)
    for (const auto* s : gens)
      if (!in_box(s->apply(l), radius)) out.box_stable = false;
  std::set<TorusPair> covered;
  for (const auto& l : lambdas)
    for (const auto& c : chars) {
      TorusPair p{l, c};
      if (covered.count(p)) continue;
      OrbitSum o{orbit_of(gens, p, q)};
      covered.insert(o.orbit.begin(), o.orbit.end());
      out.orbits.push_back(std::move(o));
    }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const OrbitSum& a, const OrbitSum& b) { return a.representative() < b.representative(); });
  out.pair_count = covered.size();
  // Completeness: every orbit is closed under all of W_0.
  for (const auto& o : out.orbits)
    for (const auto& w : group.elements())
      for (const auto& p : o.orbit)
        if (!std::binary_search(o.orbit.begin(), o.orbit.end(), weyl_act_pair(w, p, q)))
          throw InternalError("orbit of " + to_string(o.representative()) + " is not W_0-stable");
  return out;
}

std::vector<std::size_t> stabilizer_wchi(const WeylGroup& group, const ResidueCharacter& chi, std::int64_t q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    IntVec c = group[i].apply_to_character(chi);
    for (auto& x : c) x = mod(x, q - 1);
    if (c == chi) out.push_back(i);
  }
  return out;
}

RocReport roc_decomposition_check(const WeylGroup& group, std::int64_t q, const OrbitSum& orbit) {
  if (orbit.orbit.empty()) throw InputError("empty orbit");
  const auto gens = simple_elements(group);
  if (orbit_of(gens, orbit.orbit.front(), q) != orbit.orbit) throw InputError("the given set is not a W_0-orbit");

  RocReport r;
  std::map<ResidueCharacter, std::vector<TorusPair>> blocks;
  for (const auto& p : orbit.orbit) blocks[p.chi].push_back(p);
  r.blocks = blocks.size();

  // The characters occurring form one W_0-orbit.
  std::set<ResidueCharacter> char_orbit;
  for (const auto& w : group.elements()) char_orbit.insert(weyl_act_pair(w, orbit.orbit.front(), q).chi);
  std::set<ResidueCharacter> occurring;
  for (const auto& [c, _] : blocks) occurring.insert(c);
  if (char_orbit != occurring) r.witnesses.push_back("characters of the orbit are not a single W_0-orbit");

  std::map<TorusPair, long> sum;  // z_O as a formal sum, rebuilt block by block
  for (const auto& [chi, members] : blocks) {
    const auto stab = stabilizer_wchi(group, chi, q);
    std::set<TorusPair> ochi;
    for (std::size_t w : stab) ochi.insert(weyl_act_pair(group[w], members.front(), q));
    const std::set<TorusPair> block(members.begin(), members.end());
    if (ochi != block)
      r.witnesses.push_back("block " + vec_string(chi) + " is not the W_chi-orbit of " + to_string(members.front()));
    for (std::size_t w : stab)
      for (const auto& p : block)
        if (!block.count(weyl_act_pair(group[w], p, q)))
          r.witnesses.push_back("z_O_chi for chi = " + vec_string(chi) + " is not W_chi-invariant");
    for (const auto& p : ochi) sum[p] += 1;
  }
  std::map<TorusPair, long> whole;
  for (const auto& p : orbit.orbit) whole[p] = 1;
  if (sum != whole) r.witnesses.push_back("z_O differs from the sum of the block sums");
  for (const auto& w : group.elements())
    for (const auto& p : orbit.orbit)
      if (!whole.count(weyl_act_pair(w, p, q))) {
        r.witnesses.push_back("z_O is not W_0-invariant at " + to_string(p));
        break;
      }
  r.passed = r.witnesses.empty();
  return r;
}

InvariantDimension invariant_dimension(const WeylGroup& group, std::int64_t q, std::int64_t radius) {
  const TruncatedSpace space = orbits(group, q, radius);
  InvariantDimension out;
  out.orbit_count = space.orbits.size();

  std::map<TorusPair, std::size_t> index;
  for (const auto& o : space.orbits)
    for (const auto& p : o.orbit) index.emplace(p, index.size());
  const std::size_t n = index.size();

  // f(s p) - f(p) = 0 for every simple reflection s and pair p.
  const auto gens = simple_elements(group);
  RationalMatrix m(0, n);
  for (const auto* s : gens)
    for (const auto& [p, i] : index) {
      const std::size_t j = index.at(weyl_act_pair(*s, p, q));
      if (i == j) continue;
      std::vector<Rational> row(n, Rational(0));
      row[i] = -1;
      row[j] = 1;
      m.append_row(row);
    }
  out.kernel_dimension = n - (m.rows() ? rank(m) : 0);

  Rational fixed = 0;
  for (const auto& w : group.elements())
    for (const auto& [p, i] : index)
      if (weyl_act_pair(w, p, q) == p) fixed += 1;
  out.burnside = fixed / Rational(group.size());
  return out;
}

nlohmann::json to_json(const WeylGroup& group, std::int64_t q, const OrbitSum& orbit) {
  nlohmann::json j;
  j["representative"] = {{"lambda", orbit.representative().lambda}, {"chi", orbit.representative().chi}};
  j["size"] = orbit.orbit.size();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& p : orbit.orbit) terms.push_back({{"lambda", p.lambda}, {"chi", p.chi}});
  j["terms"] = terms;
  j["stabilizer_order"] = stabilizer_wchi(group, orbit.representative().chi, q).size();
  return j;
}

}  // namespace hck
