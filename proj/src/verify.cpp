#include "hck/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hck/error.hpp"
#include "hck/iwahori_hecke.hpp"
#include "hck/parallel.hpp"
#include "hck/torus_center.hpp"

namespace hck {

namespace {

constexpr std::size_t kWitnessCap = 24;
constexpr std::size_t kWitnessesPerCategory = 2;

IntMatrix rows(std::vector<std::vector<std::int64_t>> r) { return ValuationGroupScheme::from_rows(r).bounds(); }

std::string theta_string(const Theta& theta) {
  std::string s = "{";
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + std::to_string(theta[i]);
  return s + "}";
}

std::string word_string(const WeylGroup& g, std::size_t w) {
  const auto& word = g[w].word;
  if (word.empty()) return "e";
  std::string s;
  for (auto i : word) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& witness, const std::string& category = {}) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.witnesses.size() >= kWitnessCap || per_category_[category]++ >= kWitnessesPerCategory) return;
    r_.witnesses.push_back(witness());
  }

 private:
  SuiteResult& r_;
  std::map<std::string, std::size_t> per_category_;
};

void finish(SuiteResult& r) {
  r.status = r.failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.status == CheckStatus::Fail && r.witnesses.empty()) r.witnesses.push_back("failure without a recorded witness");
}

std::vector<Partition> compositions(std::size_t n) {
  std::vector<Partition> out;
  // bit i set: cut between i and i+1
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    Partition p;
    std::size_t len = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) {
        p.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    p.push_back(len);
    out.push_back(p);
  }
  return out;
}

std::string partition_string(const Partition& p) {
  std::string s;
  for (auto b : p) s += (s.empty() ? "" : "+") + std::to_string(b);
  return s;
}

// ---------------------------------------------------------------------------

SuiteResult criterion1(std::size_t) {
  SuiteResult res;
  res.name = "counterexample reproduction";
  Recorder rec(res);
  const auto ce = counterexample();
  const auto ref = reference_matrices();
  const QPoly q = QPoly::q(), qm1 = QPoly::q() - QPoly(1);
  rec.check(ce.g_x1 == ref.g_x1, [&] { return "G_{x,1} bounds " + ce.g_x1.to_string(); });
  rec.check(ce.conjugate == ref.conjugate, [&] { return "n G_{x,1} n^-1 bounds " + ce.conjugate.to_string(); });
  rec.check(ce.k1 == ref.k1, [&] { return "K_1 bounds " + ce.k1.to_string(); });
  rec.check(ce.i1 == ref.i1, [&] { return "I_1 bounds " + ce.i1.to_string(); });
  rec.check(ce.index_k1 == q * qm1 * qm1, [&] { return "[I:K_1] = " + ce.index_k1.to_string(); });
  rec.check(ce.index_i1 == q * q * qm1 * qm1, [&] { return "[I:I_1] = " + ce.index_i1.to_string(); });
  rec.check(ce.cross_checks.size() == 2, [] { return "expected point-count checks for p = 2 and 3"; });
  for (const auto& c : ce.cross_checks)
    rec.check(c.matches, [&] {
      return "p = " + std::to_string(c.p) + ": |I| = " + std::to_string(c.iwahori) + ", |K_1| = " + std::to_string(c.k1) +
             ", |I_1| = " + std::to_string(c.i1);
    });
  rec.check(ce.heart.status == HeartStatus::Mismatch, [] { return "heart check did not report MISMATCH"; });
  rec.check(ce.not_heart, [&] { return "verdict: " + ce.verdict; });
  res.details = to_json(ce);
  finish(res);
  return res;
}

SuiteResult criterion2(std::size_t jobs) {
  SuiteResult res;
  res.name = "condition (1) at alcove-interior points";
  Recorder rec(res);
  const std::vector<Rational> depths{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  nlohmann::json per = nlohmann::json::object();
  std::size_t mismatches = 0, key_failures = 0;
  for (const char* spec : {"a1", "a2", "gl2", "gl3", "b2"}) {
    const WeylGroup g(RootDatum::parse(spec));
    const RootDatum& d = g.datum();
    const auto grid = alcove_interior_grid(d, 6);
    std::size_t local_mismatch = 0, local_key = 0;
    nlohmann::json by_depth = nlohmann::json::object();
    for (const auto& r : depths) {
      std::size_t at_depth = 0;
      for (const auto& rep : heart_scan(g, r, grid, jobs))
        for (const auto& [theta, v] : rep.verdicts) {
          const bool ok = v.status == HeartStatus::ProvenCondition1;
          if (!ok) ++at_depth;
          rec.check(ok, [&] {
            const auto& w = v.witnesses.front();
            return std::string(spec) + " x = (" + to_string(rep.x) + ") r = " + to_string(r) + " theta = " +
                   theta_string(theta) + ": MISMATCH, w2 = " + word_string(g, w.w2) + ", a = " +
                   to_string(d.root(w.root).character) + ", thresholds " + std::to_string(w.at_x) + " vs " +
                   std::to_string(w.at_w2x);
          }, std::string(spec) + " r = " + to_string(r));
        }
      by_depth[to_string(r)] = at_depth;
      local_mismatch += at_depth;
    }
    for (const auto& x : grid)
      for (const auto& theta : all_thetas(d)) {
        const auto fails = key_inequality_failures(g, x, theta);
        local_key += fails.size();
        rec.check(fails.empty(), [&] {
          const auto& f = fails.front();
          return std::string(spec) + " x = (" + to_string(x) + ") theta = " + theta_string(theta) +
                 ": key inequality fails, w2 = " + word_string(g, f.w2) + ", a = " +
                 to_string(d.root(f.root).character) + ", (w2^-1 a - a)(x) = " + to_string(f.value);
        }, std::string(spec) + " key");
      }
    per[spec] = {{"interior_points", grid.size()},
                 {"mismatches", local_mismatch},
                 {"mismatches_by_depth", by_depth},
                 {"key_inequality_failures", local_key}};
    mismatches += local_mismatch;
    key_failures += local_key;
  }
  res.details = {{"data", per}, {"mismatches", mismatches}, {"key_inequality_failures", key_failures}};
  finish(res);
  return res;
}

SuiteResult criterion3(std::size_t jobs) {
  SuiteResult res;
  res.name = "Iwahori factorization of G_{x,r}";
  Recorder rec(res);
  std::size_t exhaustive = 0;
  for (std::size_t n : {1, 2, 3}) {
    const auto d = RootDatum::general_linear(n);
    for (const auto& x : base_alcove_grid(d, 2))
      for (const Rational& r : {Rational(1, 2), Rational(1)}) {
        const auto k = from_filtration(d, filtration_profile(d, x, r));
        for (const auto& blocks : compositions(n))
          for (auto sign : {SignConvention::LowerOpposite, SignConvention::UpperOpposite})
            for (std::int64_t p : {2, 3}) {
              const auto rep = iwahori_factorization_check(k, blocks, sign, p, 20'000'000, jobs);
              if (rep.exhaustive.has_value()) ++exhaustive;
              // Agreement of both halves is what is required here; a capped
              // run is not accepted.
              const bool ok = rep.analytic && rep.exhaustive.value_or(false);
              rec.check(ok, [&] {
                return "GL" + std::to_string(n) + " x = (" + to_string(x) + ") r = " + to_string(r) + " blocks " +
                       partition_string(blocks) +
                       (sign == SignConvention::LowerOpposite ? " lower" : " upper") + " p = " + std::to_string(p) +
                       ": " + rep.status;
              });
            }
      }
  }
  res.details = {{"exhaustive_runs", exhaustive}};
  finish(res);
  return res;
}

SuiteResult criterion4(std::size_t jobs) {
  SuiteResult res;
  res.name = "Clifford theory on the builtin catalog";
  Recorder rec(res);
  const auto models = builtin_catalog();
  rec.check(models.size() >= 12, [&] { return "catalog has only " + std::to_string(models.size()) + " entries"; });
  const auto reports = evaluate_catalog(models, jobs);
  std::size_t verified = 0;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& r : reports) {
    rec.check(r.group_order <= 512, [&] { return r.name + ": order " + std::to_string(r.group_order) + " > 512"; });
    rec.check(r.genclif_dimension && r.genclif_decomposition, [&] { return r.name + ": dimension identity fails"; });
    rec.check(r.clifbis_chain && r.bicharacter_ok, [&] { return r.name + ": index chain fails"; });
    rec.check(r.clifbis_twist, [&] { return r.name + ": |X| != [J~ : dagger J]"; });
    rec.check(r.frobenius, [&] { return r.name + ": Frobenius reciprocity fails"; });
    if (r.hypothesis_failure.empty()) {
      ++verified;
      rec.check(r.transfer == CheckStatus::Pass, [&] { return r.name + ": multiplicity transfer " + to_string(r.transfer); });
      rec.check(r.center == CheckStatus::Pass, [&] { return r.name + ": center dimension " + to_string(r.center); });
      rec.check(r.commutativity == CheckStatus::Pass, [&] { return r.name + ": commutativity " + to_string(r.commutativity); });
    }
    table.push_back({{"name", r.name}, {"passed", r.passed()}, {"hypotheses", r.hypothesis_failure.empty() ? "verified" : r.hypothesis_failure}});
  }
  rec.check(verified > 0, [] { return "no entry verified its hypotheses"; });
  res.details = {{"entries", reports.size()}, {"hypotheses_verified", verified}, {"table", table}};
  finish(res);
  return res;
}

SuiteResult criterion5(std::size_t) {
  SuiteResult res;
  res.name = "torus orbit sums for GL2";
  Recorder rec(res);
  const WeylGroup g(RootDatum::parse("gl2"));
  nlohmann::json per = nlohmann::json::array();
  for (std::int64_t q : {2, 3, 4})
    for (std::int64_t radius : {0, 1, 2}) {
      const auto space = orbits(g, q, radius);
      for (const auto& o : space.orbits) {
        const auto roc = roc_decomposition_check(g, q, o);
        rec.check(roc.passed, [&] {
          return "q = " + std::to_string(q) + " R = " + std::to_string(radius) + " orbit of " +
                 to_string(o.representative()) + ": " + (roc.witnesses.empty() ? "" : roc.witnesses.front());
        });
      }
      const auto dim = invariant_dimension(g, q, radius);
      rec.check(dim.agree(), [&] {
        return "q = " + std::to_string(q) + " R = " + std::to_string(radius) + ": orbits " +
               std::to_string(dim.orbit_count) + ", kernel " + std::to_string(dim.kernel_dimension) + ", Burnside " +
               to_string(dim.burnside);
      });
      per.push_back({{"q", q}, {"radius", radius}, {"orbits", dim.orbit_count}, {"kernel", dim.kernel_dimension},
                     {"burnside", to_string(dim.burnside)}});
    }
  res.details = {{"runs", per}};
  finish(res);
  return res;
}

// (theta_lambda - theta_{s lambda}) / (1 - theta_{-alpha^vee}) as an explicit geometric sum.
HeckeElement divided_difference(const HeckeAlgebra<LaurentScalar>& h, const Coweight& lambda, std::size_t i) {
  const RootDatum& d = h.group().datum();
  const Root& a = d.root(d.simple_roots()[i]);
  const std::int64_t k = d.pairing(a.character, lambda);
  HeckeElement out;
  if (k > 0)
    for (std::int64_t j = 0; j < k; ++j) out = out + h.theta(sub(lambda, scale(j, a.coroot)));
  else
    for (std::int64_t j = 1; j <= -k; ++j) out = out - h.theta(add(lambda, scale(j, a.coroot)));
  return out;
}

std::vector<Coweight> box(std::size_t rank, std::int64_t radius) {
  std::vector<Coweight> out{Coweight{}};
  for (std::size_t c = 0; c < rank; ++c) {
    std::vector<Coweight> next;
    for (const auto& v : out)
      for (std::int64_t x = -radius; x <= radius; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

int braid_order(std::int64_t aij, std::int64_t aji) {
  switch (aij * aji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

SuiteResult criterion6(std::size_t) {
  SuiteResult res;
  res.name = "Bernstein relations and the Satake center";
  Recorder rec(res);
  const LaurentScalar q = LaurentScalar::q();
  nlohmann::json per = nlohmann::json::array();
  for (const char* spec : {"a1", "gl2"}) {
    const WeylGroup g(RootDatum::parse(spec));
    const RootDatum& d = g.datum();
    const HeckeAlgebra<LaurentScalar> h(g, q);
    const std::size_t s = d.semisimple_rank();
    std::size_t quadratic = 0, braid = 0, additivity = 0, bernstein = 0;
    for (std::size_t i = 0; i < s; ++i) {
      const auto t = h.t_simple(i);
      ++quadratic;
      rec.check(h.multiply(t, t) == scale(t, q - LaurentScalar(1)) + scale(h.one(), q),
                [&] { return std::string(spec) + ": T_s^2 relation fails for s" + std::to_string(i + 1); });
      for (std::size_t j = i + 1; j < s; ++j) {
        const int m = braid_order(d.cartan()[i][j], d.cartan()[j][i]);
        auto l = h.one(), r = h.one();
        for (int k = 0; k < m; ++k) {
          l = h.multiply(l, h.t_simple(k % 2 ? j : i));
          r = h.multiply(r, h.t_simple(k % 2 ? i : j));
        }
        ++braid;
        rec.check(l == r, [&] { return std::string(spec) + ": braid relation fails for s" + std::to_string(i + 1) + ", s" + std::to_string(j + 1); });
      }
    }
    for (std::int64_t radius : {0, 1, 2}) {
      const auto pts = box(d.rank(), radius);
      for (const auto& l : pts) {
        for (const auto& m : pts) {
          ++additivity;
          rec.check(h.multiply(h.theta(l), h.theta(m)) == h.theta(add(l, m)),
                    [&] { return std::string(spec) + ": theta(" + to_string(l) + ") theta(" + to_string(m) + ") != theta(sum)"; });
        }
        for (std::size_t i = 0; i < s; ++i) {
          const auto sl = d.reflect(d.simple_roots()[i], l);
          const auto lhs = h.multiply(h.t_simple(i), h.theta(l)) - h.multiply(h.theta(sl), h.t_simple(i));
          ++bernstein;
          rec.check(lhs == scale(divided_difference(h, l, i), q - LaurentScalar(1)),
                    [&] { return std::string(spec) + ": Bernstein relation fails at lambda = " + to_string(l); });
        }
      }
      const auto sat = satake_check(g, radius);
      std::set<Coweight> dominant;
      for (const auto& l : pts) dominant.insert(dominant_representative(d, l));
      rec.check(sat.all_central, [&] { return std::string(spec) + " R = " + std::to_string(radius) + ": some z_mu is not central"; });
      rec.check(sat.passed && sat.kernel_dimension == dominant.size() && sat.central.size() == dominant.size(), [&] {
        return std::string(spec) + " R = " + std::to_string(radius) + ": kernel " + std::to_string(sat.kernel_dimension) +
               ", dominant orbits " + std::to_string(dominant.size()) +
               (sat.witnesses.empty() ? std::string() : ", " + sat.witnesses.front());
      });
      per.push_back({{"datum", spec}, {"radius", radius}, {"dominant_orbits", dominant.size()},
                     {"kernel_dimension", sat.kernel_dimension}, {"truncated_dimension", sat.truncated_dimension}});
    }
    per.push_back({{"datum", spec}, {"quadratic", quadratic}, {"braid", braid}, {"theta_products", additivity},
                   {"bernstein", bernstein}});
  }
  res.details = {{"runs", per}};
  finish(res);
  return res;
}

SuiteResult criterion7(std::size_t) {
  SuiteResult res;
  res.name = "cross-module coherence";
  Recorder rec(res);
  const auto ref = reference_matrices();
  const auto gl3 = RootDatum::parse("gl3");
  const WeylGroup w3(gl3);
  const auto x = ApartmentPoint::parse(gl3, "1/2,0,0");
  const auto k = from_filtration(gl3, filtration_profile(gl3, x, 1));
  const auto s1x = act(w3[w3.simple_times(0, 0)], x);
  const auto kc = from_filtration(gl3, filtration_profile(gl3, s1x, 1));
  rec.check(k.bounds() == ref.g_x1, [&] { return "thresholds at x give " + k.to_string(); });
  rec.check(kc.bounds() == ref.conjugate, [&] { return "thresholds at s1 x give " + kc.to_string(); });
  rec.check(kc == conjugate_by_permutation(k, {1, 0, 2}), [] { return "thresholds at s1 x differ from permuting the bounds"; });
  rec.check(levi_block(k, {1, 2}, 1).bounds() == ref.k1, [] { return "Levi block at x is not K_1"; });
  rec.check(levi_block(kc, {1, 2}, 1).bounds() == ref.i1, [] { return "Levi block at s1 x is not I_1"; });
  const auto gl2 = RootDatum::parse("gl2");
  const auto i1 = from_filtration(gl2, filtration_profile(gl2, ApartmentPoint::parse(gl2, "1/2,0"), 1));
  rec.check(i1.bounds() == ref.i1, [&] { return "GL2 thresholds at e_1/2 give " + i1.to_string(); });

  std::size_t compared = 0;
  for (const char* spec : {"a1", "gl2"}) {
    const WeylGroup g(RootDatum::parse(spec));
    for (std::int64_t radius : {0, 1, 2}) {
      std::set<std::vector<Coweight>> hecke;
      for (const auto& z : satake_check(g, radius).central) {
        std::vector<Coweight> ls;
        for (const auto& [label, c] : z.element) ls.push_back(label.first);
        hecke.insert(ls);
      }
      for (std::int64_t q : {2, 3}) {
        std::set<std::vector<Coweight>> torus;
        for (const auto& o : orbits(g, q, radius).orbits) {
          if (std::any_of(o.representative().chi.begin(), o.representative().chi.end(), [](auto c) { return c != 0; }))
            continue;
          std::vector<Coweight> ls;
          for (const auto& p : o.orbit) ls.push_back(p.lambda);
          torus.insert(ls);
        }
        ++compared;
        rec.check(torus == hecke, [&] {
          return std::string(spec) + " R = " + std::to_string(radius) + " q = " + std::to_string(q) + ": " +
                 std::to_string(torus.size()) + " trivial-character orbits vs " + std::to_string(hecke.size()) +
                 " central supports";
        });
      }
    }
  }
  res.details = {{"support_comparisons", compared}};
  finish(res);
  return res;
}

}  // namespace

Partition levi_partition(const RootDatum& datum, const Theta& theta) {
  if (!datum.is_general_linear()) throw InputError("Levi blocks are only defined for GL_n data, not " + datum.name());
  const std::size_t n = datum.rank();
  std::vector<bool> joined(n, false);  // joined[i]: i and i+1 in the same block
  for (auto i : theta) {
    if (i + 1 >= n) throw InputError("theta index " + std::to_string(i) + " out of range");
    joined[i] = true;
  }
  Partition p;
  std::size_t len = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (joined[i]) {
      ++len;
    } else {
      p.push_back(len);
      len = 1;
    }
  }
  p.push_back(len);
  return p;
}

std::vector<HeartEscalation> escalate_mismatch(const WeylGroup& group, const ApartmentPoint& x, const Rational& r,
                                               const HeartVerdict& verdict) {
  const RootDatum& d = group.datum();
  std::vector<HeartEscalation> out;
  std::set<std::pair<Theta, std::size_t>> seen;
  const auto k = from_filtration(d, filtration_profile(d, x, r));
  for (const auto& w : verdict.witnesses) {
    if (!seen.emplace(w.theta, w.w2).second) continue;
    HeartEscalation e;
    e.theta = w.theta;
    e.w2 = w.w2;
    e.blocks = levi_partition(d, w.theta);
    const auto kw = from_filtration(d, filtration_profile(d, act(group[w.w2], x), r));
    e.at_x = k.bounds();
    e.at_w2x = kw.bounds();
    for (std::size_t b = 0; b < e.blocks.size(); ++b) {
      const auto v = conjugacy_obstruction(levi_block(k, e.blocks, b), levi_block(kw, e.blocks, b));
      e.per_block.push_back(v);
      if (v == ConjugacyVerdict::DistinctVolume) e.verdict = v;
    }
    out.push_back(std::move(e));
  }
  return out;
}

ReferenceMatrices reference_matrices() {
  return {rows({{1, 1, 1}, {2, 1, 1}, {2, 1, 1}}), rows({{1, 2, 1}, {1, 1, 1}, {1, 2, 1}}), rows({{1, 1}, {1, 1}}),
          rows({{1, 1}, {2, 1}})};
}

CounterexampleReport counterexample() {
  const auto gl3 = RootDatum::parse("gl3");
  const WeylGroup g(gl3);
  const auto x = ApartmentPoint::parse(gl3, "1/2,0,0");
  const Rational r(1);
  const Theta theta{1};  // e_2 - e_3
  const Partition blocks = levi_partition(gl3, theta);

  CounterexampleReport out;
  out.heart = heart_condition1_check(g, x, r, theta);
  out.escalations = escalate_mismatch(g, x, r, out.heart);

  const auto k = from_filtration(gl3, filtration_profile(gl3, x, r));
  const auto s1x = act(g[g.simple_times(0, 0)], x);
  const auto kc = from_filtration(gl3, filtration_profile(gl3, s1x, r));
  const auto k1 = levi_block(k, blocks, 1);
  const auto i1 = levi_block(kc, blocks, 1);
  const auto iwahori = ValuationGroupScheme::from_rows({{0, 0}, {1, 0}});
  out.g_x1 = k.bounds();
  out.conjugate = kc.bounds();
  out.k1 = k1.bounds();
  out.i1 = i1.bounds();
  out.iwahori = iwahori.bounds();
  out.index_k1 = group_index(iwahori, k1);
  out.index_i1 = group_index(iwahori, i1);
  for (std::int64_t p : {2, 3}) {
    PointCountCrossCheck c;
    c.p = p;
    c.iwahori = brute_force_count_full(iwahori, p, 2);
    c.k1 = brute_force_count_full(k1, p, 2);
    c.i1 = brute_force_count_full(i1, p, 2);
    c.matches = c.iwahori % c.k1 == 0 && c.iwahori % c.i1 == 0 &&
                Integer(c.iwahori / c.k1) == out.index_k1.evaluate(p) &&
                Integer(c.iwahori / c.i1) == out.index_i1.evaluate(p);
    out.cross_checks.push_back(c);
  }
  out.obstruction = conjugacy_obstruction(k1, i1);
  out.not_heart = out.heart.status == HeartStatus::Mismatch && out.obstruction == ConjugacyVerdict::DistinctVolume;
  out.verdict = out.not_heart ? "G_{x,1} ∉ K^♥(S,G)" : "INCONCLUSIVE";
  return out;
}

nlohmann::json to_json(const CounterexampleReport& r) {
  auto mat = [](const IntMatrix& m) { return ValuationGroupScheme(m).to_json(); };
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.cross_checks)
    checks.push_back({{"p", c.p}, {"order_I", c.iwahori}, {"order_K1", c.k1}, {"order_I1", c.i1}, {"matches", c.matches}});
  return {{"datum", "gl3"},
          {"x", {"1/2", "0", "0"}},
          {"r", "1"},
          {"theta", {1}},
          {"heart_status", r.heart.status == HeartStatus::Mismatch ? "MISMATCH" : "PROVEN_CONDITION_1"},
          {"matrices", {{"G_x1", mat(r.g_x1)}, {"nG_x1n^-1", mat(r.conjugate)}, {"K1", mat(r.k1)}, {"I1", mat(r.i1)}, {"I", mat(r.iwahori)}}},
          {"index_I_K1", r.index_k1.to_string()},
          {"index_I_I1", r.index_i1.to_string()},
          {"point_counts_mod_p2", checks},
          {"obstruction", to_string(r.obstruction)},
          {"verdict", r.verdict}};
}

SuiteResult run_criterion(int criterion, std::size_t jobs) {
  static const std::map<int, std::function<SuiteResult(std::size_t)>> suites{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}};
  const auto it = suites.find(criterion);
  if (it == suites.end()) throw InputError("no acceptance criterion " + std::to_string(criterion));
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r = it->second(jobs);
  r.criterion = criterion;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const SuiteResult& r, bool timing) {
  nlohmann::json j{{"criterion", r.criterion},
                   {"suite", r.name},
                   {"status", to_string(r.status)},
                   {"checks", r.checks},
                   {"failures", r.failures},
                   {"witnesses", r.witnesses},
                   {"details", r.details}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace hck
