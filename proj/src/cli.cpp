#include "hck/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hck/error.hpp"
#include "hck/iwahori_hecke.hpp"
#include "hck/parallel.hpp"
#include "hck/torus_center.hpp"
#include "hck/verify.hpp"

namespace hck {

namespace {

using nlohmann::json;

struct Outcome {
  json report;
  std::string text;
  bool failed = false;
};

std::string theta_string(const Theta& theta) {
  std::string s = "{";
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + std::to_string(theta[i]);
  return s + "}";
}

std::string word_string(const WeylGroup& g, std::size_t w) {
  if (g[w].word.empty()) return "e";
  std::string s;
  for (auto i : g[w].word) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

std::string indent(const std::string& block, const std::string& pad) {
  std::istringstream in(block);
  std::string line, out;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

Rational parse_depth(const std::string& text) {
  Rational r = parse_rational(text);
  if (r <= 0) throw InputError("--r must be positive, got " + text);
  return r;
}

// ---------------------------------------------------------------------------

Outcome cmd_rootdatum(const std::string& spec) {
  const auto d = RootDatum::parse(spec);
  const WeylGroup g(d);
  Outcome o;
  o.report = d.to_json();
  o.report["name"] = d.name();
  o.report["weyl_order"] = g.size();
  o.report["root_count"] = d.roots().size();
  std::ostringstream t;
  t << d.name() << ": rank " << d.rank() << ", semisimple rank " << d.semisimple_rank() << ", " << d.roots().size()
    << " roots, |W0| = " << g.size() << "\n";
  t << "simple roots:";
  for (auto i : d.simple_roots()) t << " " << to_string(d.root(i).character);
  t << "\npositive roots:";
  for (auto i : d.positive_roots()) t << " " << to_string(d.root(i).character);
  t << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_heart(const std::string& spec, const std::string& xs, const std::string& rs,
                  const std::vector<std::size_t>& theta_in, std::size_t jobs) {
  const auto d = RootDatum::parse(spec);
  const WeylGroup g(d);
  const auto x = ApartmentPoint::parse(d, xs);
  const Rational r = parse_depth(rs);
  std::vector<Theta> thetas;
  if (theta_in.empty()) {
    thetas = all_thetas(d);
  } else {
    Theta t = theta_in;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (auto i : t)
      if (i >= d.semisimple_rank()) throw InputError("--theta index " + std::to_string(i) + " out of range");
    thetas.push_back(t);
  }
  std::vector<HeartVerdict> verdicts(thetas.size());
  parallel_for(thetas.size(), jobs, [&](std::size_t i) { verdicts[i] = heart_condition1_check(g, x, r, thetas[i]); });

  Outcome o;
  std::ostringstream t;
  const auto cls = classify_point(d, x);
  t << d.name() << ", x = (" << to_string(x) << "), r = " << to_string(r) << ", " << cls.label() << "\n";
  json vs = json::array();
  bool mismatch = false, not_heart = false;
  json escal = json::array();
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    auto j = to_json(d, g, verdicts[i]);
    j["theta"] = thetas[i];
    vs.push_back(j);
    const bool ok = verdicts[i].status == HeartStatus::ProvenCondition1;
    t << "theta " << theta_string(thetas[i]) << ": " << (ok ? "PROVEN_CONDITION_1" : "MISMATCH") << "\n";
    if (ok) continue;
    mismatch = true;
    for (const auto& w : verdicts[i].witnesses)
      t << "  w2 = " << word_string(g, w.w2) << ", a = " << to_string(d.root(w.root).character) << ", threshold "
        << w.at_x << " at x vs " << w.at_w2x << " at w2.x\n";
    if (!d.is_general_linear()) continue;
    for (const auto& e : escalate_mismatch(g, x, r, verdicts[i])) {
      json blocks = json::array();
      for (std::size_t b = 0; b < e.blocks.size(); ++b)
        blocks.push_back({{"size", e.blocks[b]}, {"obstruction", to_string(e.per_block[b])}});
      escal.push_back({{"theta", e.theta},
                       {"w2_word", g[e.w2].word},
                       {"G_x_r", ValuationGroupScheme(e.at_x).to_json()},
                       {"G_w2x_r", ValuationGroupScheme(e.at_w2x).to_json()},
                       {"levi_blocks", blocks},
                       {"obstruction", to_string(e.verdict)}});
      t << "  escalation w2 = " << word_string(g, e.w2) << ": " << to_string(e.verdict) << "\n";
      t << "    G_{x,r}:\n" << indent(ValuationGroupScheme(e.at_x).to_string(), "      ");
      t << "    G_{w2.x,r}:\n" << indent(ValuationGroupScheme(e.at_w2x).to_string(), "      ");
      if (e.verdict == ConjugacyVerdict::DistinctVolume) not_heart = true;
    }
  }
  json xs_json = json::array();
  for (const auto& c : x.offset) xs_json.push_back(to_string(c));
  std::string verdict = "PROVEN_CONDITION_1";
  if (not_heart)
    verdict = "G_{x,r} ∉ K^♥(S,G)";
  else if (mismatch)
    verdict = "INCONCLUSIVE";
  t << "verdict: " << verdict << "\n";
  o.report = {{"datum", d.name()},
              {"x", xs_json},
              {"r", to_string(r)},
              {"class", cls.label()},
              {"verdicts", vs},
              {"escalations", escal},
              {"verdict", verdict}};
  o.text = t.str();
  return o;
}

Outcome cmd_counterexample(const std::string& qspec) {
  std::optional<std::int64_t> qnum;
  if (qspec != "symbolic") {
    try {
      std::size_t used = 0;
      qnum = std::stoll(qspec, &used);
      if (used != qspec.size()) throw std::invalid_argument(qspec);
    } catch (const std::exception&) {
      throw InputError("--q must be 'symbolic' or a prime power, got " + qspec);
    }
    if (!is_prime_power(*qnum)) throw InputError("--q must be a prime power, got " + qspec);
  }
  const auto ce = counterexample();
  Outcome o;
  o.report = to_json(ce);
  std::ostringstream t;
  auto show = [&](const char* name, const IntMatrix& m) {
    t << name << ":\n" << indent(ValuationGroupScheme(m).to_string(), "  ");
  };
  t << "GL3, x = (1/2,0,0), r = 1, theta = {1}: "
    << (ce.heart.status == HeartStatus::Mismatch ? "MISMATCH" : "PROVEN_CONDITION_1") << "\n";
  show("G_{x,1}", ce.g_x1);
  show("n G_{x,1} n^-1", ce.conjugate);
  show("K_1 (G_{x,1} cap M, GL2 block)", ce.k1);
  show("I_1 (n G_{x,1} n^-1 cap M, GL2 block)", ce.i1);
  t << "[I : K_1] = " << ce.index_k1.to_string() << "\n";
  t << "[I : I_1] = " << ce.index_i1.to_string() << "\n";
  for (const auto& c : ce.cross_checks)
    t << "p = " << c.p << ": |I| = " << c.iwahori << ", |K_1| = " << c.k1 << ", |I_1| = " << c.i1 << " mod p^2 -> "
      << (c.matches ? "matches" : "MISMATCH") << "\n";
  if (qnum) {
    o.report["q"] = *qnum;
    o.report["index_I_K1_at_q"] = ce.index_k1.evaluate(*qnum).get_str();
    o.report["index_I_I1_at_q"] = ce.index_i1.evaluate(*qnum).get_str();
    t << "at q = " << *qnum << ": [I:K_1] = " << ce.index_k1.evaluate(*qnum).get_str()
      << ", [I:I_1] = " << ce.index_i1.evaluate(*qnum).get_str() << "\n";
  }
  t << "volumes: " << to_string(ce.obstruction) << "\n";
  t << "verdict: " << ce.verdict << "\n";
  o.text = t.str();
  bool ok = ce.not_heart;
  for (const auto& c : ce.cross_checks) ok = ok && c.matches;
  o.failed = !ok;
  return o;
}

Partition parse_partition(const std::string& text, std::size_t n) {
  Partition p;
  std::size_t total = 0;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v <= 0) throw std::invalid_argument(part);
      p.push_back(static_cast<std::size_t>(v));
      total += p.back();
    } catch (const std::exception&) {
      throw InputError("--blocks expects positive block sizes like 1,2; got " + text);
    }
  }
  if (total != n) throw InputError("--blocks " + text + " does not sum to n = " + std::to_string(n));
  return p;
}

Outcome cmd_spade(const std::string& spec, const std::string& xs, const std::string& rs, const std::string& blocks_in,
                  const std::vector<std::int64_t>& primes, const std::string& sign_in, std::size_t jobs) {
  const auto d = RootDatum::parse(spec);
  if (!d.is_general_linear()) throw InputError("spade-check needs a GL_n datum, got " + d.name());
  const auto x = ApartmentPoint::parse(d, xs);
  const Rational r = parse_depth(rs);
  const auto k = from_filtration(d, filtration_profile(d, x, r));
  std::vector<Partition> parts;
  if (blocks_in.empty()) {
    const std::size_t n = d.rank();
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
      parts.push_back(p);
    }
  } else {
    parts.push_back(parse_partition(blocks_in, d.rank()));
  }
  std::vector<SignConvention> signs;
  if (sign_in == "lower" || sign_in == "both") signs.push_back(SignConvention::LowerOpposite);
  if (sign_in == "upper" || sign_in == "both") signs.push_back(SignConvention::UpperOpposite);
  for (auto p : primes)
    if (p != 2 && p != 3) throw InputError("--p must be 2 or 3");

  Outcome o;
  std::ostringstream t;
  t << d.name() << ", x = (" << to_string(x) << "), r = " << to_string(r) << "\nG_{x,r}:\n"
    << indent(k.to_string(), "  ");
  json rows = json::array();
  for (const auto& part : parts)
    for (auto sign : signs)
      for (auto p : primes) {
        const auto rep = iwahori_factorization_check(k, part, sign, p, 20'000'000, jobs);
        std::string ps;
        for (auto b : part) ps += (ps.empty() ? "" : "+") + std::to_string(b);
        const char* sn = sign == SignConvention::LowerOpposite ? "lower" : "upper";
        rows.push_back({{"blocks", part},
                        {"opposite", sn},
                        {"p", p},
                        {"analytic", rep.analytic},
                        {"exhaustive", rep.exhaustive ? json(*rep.exhaustive) : json(nullptr)},
                        {"level", rep.level},
                        {"elements", rep.elements},
                        {"status", rep.status}});
        t << "blocks " << ps << ", N^- " << sn << ", p = " << p << ": " << rep.status << " (analytic "
          << (rep.analytic ? "yes" : "no") << ", exhaustive over " << rep.elements << " elements mod p^" << rep.level
          << ")\n";
        if (rep.status == "FAIL") o.failed = true;
      }
  o.report = {{"datum", d.name()}, {"x", xs}, {"r", to_string(r)}, {"bounds", k.to_json()}, {"checks", rows}};
  o.text = t.str();
  return o;
}

std::vector<CliffordModel> read_catalog(const std::string& source) {
  if (source == "builtin") return builtin_catalog();
  std::ifstream in(source);
  if (!in) throw InputError("cannot open catalog file " + source);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  return load_catalog(doc);
}

Outcome cmd_clifford(const std::string& source, const std::string& check, std::size_t jobs) {
  const auto reports = evaluate_catalog(read_catalog(source), jobs);
  Outcome o;
  json entries = json::array();
  std::ostringstream t;
  t << std::left << std::setw(46) << "entry" << std::setw(6) << "|G|" << std::setw(4) << "m" << std::setw(7) << "orbit"
    << std::setw(5) << "|X|" << std::setw(8) << "lemmas" << std::setw(10) << "transfer" << std::setw(10) << "center"
    << std::setw(10) << "commute" << "result\n";
  for (const auto& r : reports) {
    bool bad = false;
    if (check == "all" || check == "lemmas") bad = bad || !r.lemmas_hold();
    if (check == "all" || check == "transfer") bad = bad || r.transfer == CheckStatus::Fail;
    if (check == "all" || check == "center") bad = bad || r.center == CheckStatus::Fail;
    if (check == "all" || check == "commutativity") bad = bad || r.commutativity == CheckStatus::Fail;
    o.failed = o.failed || bad;
    auto j = to_json(r);
    j["status"] = bad ? "FAIL" : "PASS";
    entries.push_back(j);
    std::string name = r.name.size() > 44 ? r.name.substr(0, 44) : r.name;
    t << std::setw(46) << name << std::setw(6) << r.group_order << std::setw(4) << r.m << std::setw(7) << r.orbit_size
      << std::setw(5) << r.twist_group_order << std::setw(8) << (r.lemmas_hold() ? "PASS" : "FAIL") << std::setw(10)
      << to_string(r.transfer) << std::setw(10) << to_string(r.center) << std::setw(10) << to_string(r.commutativity)
      << (bad ? "FAIL" : "PASS") << "\n";
    if (!r.hypothesis_failure.empty()) t << "    skipped: " << r.hypothesis_failure << "\n";
  }
  o.report = {{"catalog", source}, {"check", check}, {"entries", entries}};
  o.text = t.str();
  return o;
}

std::int64_t parse_q(const std::string& text) {
  std::int64_t q = 0;
  try {
    std::size_t used = 0;
    q = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw InputError("--q must be an integer prime power, got " + text);
  }
  if (!is_prime_power(q)) throw InputError("--q must be a prime power, got " + text);
  return q;
}

Outcome cmd_torus(const std::string& spec, const std::string& qs, std::int64_t radius, const std::string& check) {
  if (radius < 0) throw InputError("--radius must be non-negative");
  const std::int64_t q = parse_q(qs);
  const WeylGroup g(RootDatum::parse(spec));
  const auto space = orbits(g, q, radius);
  Outcome o;
  std::ostringstream t;
  t << g.datum().name() << ", q = " << q << ", R = " << radius << ": " << space.orbits.size() << " orbits, "
    << space.pair_count << " pairs, box " << (space.box_stable ? "W0-stable" : "not W0-stable") << "\n";
  o.report = {{"datum", g.datum().name()}, {"q", q}, {"radius", radius}, {"orbit_count", space.orbits.size()},
              {"pair_count", space.pair_count}, {"box_stable", space.box_stable}};
  if (check == "roc" || check == "all") {
    json per = json::array();
    std::size_t failed = 0;
    for (const auto& orb : space.orbits) {
      const auto roc = roc_decomposition_check(g, q, orb);
      auto j = to_json(g, q, orb);
      j["blocks"] = roc.blocks;
      j["status"] = roc.passed ? "PASS" : "FAIL";
      j["witnesses"] = roc.witnesses;
      per.push_back(j);
      t << "  " << to_string(orb.representative()) << ": size " << orb.orbit.size() << ", " << roc.blocks
        << " blocks, " << (roc.passed ? "PASS" : "FAIL") << "\n";
      for (const auto& w : roc.witnesses) t << "    " << w << "\n";
      if (!roc.passed) ++failed;
    }
    o.report["roc"] = {{"orbits", per}, {"status", failed ? "FAIL" : "PASS"}};
    t << "roc decomposition: " << (failed ? "FAIL" : "PASS") << "\n";
    o.failed = o.failed || failed > 0;
  }
  if (check == "dimension" || check == "all") {
    const auto dim = invariant_dimension(g, q, radius);
    o.report["invariant_dimension"] = {{"orbit_count", dim.orbit_count}, {"kernel_dimension", dim.kernel_dimension},
                                       {"burnside", to_string(dim.burnside)}, {"status", dim.agree() ? "PASS" : "FAIL"}};
    t << "invariant dimension: orbits " << dim.orbit_count << ", kernel " << dim.kernel_dimension << ", Burnside "
      << to_string(dim.burnside) << ": " << (dim.agree() ? "PASS" : "FAIL") << "\n";
    o.failed = o.failed || !dim.agree();
  }
  o.text = t.str();
  return o;
}

Outcome cmd_iwahori(const std::string& spec, std::int64_t radius, const std::string& v0s) {
  if (radius < 0) throw InputError("--radius must be non-negative");
  const Rational v0 = parse_rational(v0s);
  if (v0 == 0 || v0 == 1 || v0 == -1) throw InputError("--v0 must avoid 0 and +-1");
  const WeylGroup g(RootDatum::parse(spec));
  const auto rep = satake_check(g, radius, v0);
  Outcome o;
  std::ostringstream t;
  t << g.datum().name() << ", R = " << radius << ": " << rep.central.size() << " orbit sums z_mu, truncated dimension "
    << rep.truncated_dimension << ", kernel dimension at v = " << to_string(v0) << ": " << rep.kernel_dimension << "\n";
  json basis = json::array();
  for (const auto& z : rep.central) {
    basis.push_back({{"mu", z.mu}, {"element", to_json(g, z.element)}, {"text", to_string(g, z.element)}});
    t << "  z_" << to_string(z.mu) << " = " << to_string(g, z.element) << "\n";
  }
  for (const auto& w : rep.witnesses) t << "  " << w << "\n";
  t << "all central: " << (rep.all_central ? "yes" : "no") << ", independent: " << (rep.independent ? "yes" : "no")
    << "\n";
  t << (rep.passed ? "PASS" : "FAIL") << "\n";
  o.report = {{"datum", g.datum().name()},
              {"radius", radius},
              {"v0", to_string(v0)},
              {"basis", basis},
              {"all_central", rep.all_central},
              {"independent", rep.independent},
              {"truncated_dimension", rep.truncated_dimension},
              {"kernel_dimension", rep.kernel_dimension},
              {"witnesses", rep.witnesses},
              {"status", rep.passed ? "PASS" : "FAIL"}};
  o.text = t.str();
  o.failed = !rep.passed;
  return o;
}

Outcome cmd_verify_all(const std::vector<int>& which_in, bool timing, std::size_t jobs) {
  std::vector<int> which = which_in;
  if (which.empty())
    for (int c = 1; c <= kCriteria; ++c) which.push_back(c);
  Outcome o;
  json suites = json::array();
  std::ostringstream t;
  for (int c : which) {
    const auto r = run_criterion(c, jobs);
    suites.push_back(to_json(r, timing));
    t << "criterion " << c << " " << to_string(r.status) << "  " << r.name << " (" << r.checks << " checks, "
      << r.failures << " failed";
    if (timing) t << ", " << std::fixed << std::setprecision(2) << r.seconds << " s";
    t << ")\n";
    for (const auto& w : r.witnesses) t << "    " << w << "\n";
    if (r.failures > r.witnesses.size()) t << "    ... " << r.failures - r.witnesses.size() << " more\n";
    o.failed = o.failed || r.status == CheckStatus::Fail;
  }
  o.report = {{"suites", suites}, {"status", o.failed ? "FAIL" : "PASS"}};
  o.text = t.str();
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for compact open subgroups, types and Hecke algebra centers"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::size_t jobs = default_jobs();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "Worker threads (default: HCK_JOBS or 1)")->check(CLI::PositiveNumber);

  std::string datum, x, r, qspec = "symbolic", catalog = "builtin", check = "all", blocks, sign = "both";
  std::string v0 = "2";
  std::vector<std::size_t> theta;
  std::vector<std::int64_t> primes{2, 3};
  std::vector<int> criteria;
  std::int64_t radius = 0;
  bool no_timing = false;

  auto* rd = app.add_subcommand("rootdatum", "Describe a root datum and its Weyl group");
  rd->add_option("--datum", datum, "Builtin name (gl3, a2, ...), inline JSON, or JSON file")->required();

  auto* hc = app.add_subcommand("heart-check", "Condition (1) of the heart criterion at a point");
  hc->add_option("--datum", datum)->required();
  hc->add_option("--x", x, "Coordinates of x - x0, e.g. 1/2,0,0")->required();
  hc->add_option("--r", r, "Depth, an exact rational")->required();
  hc->add_option("--theta", theta, "Simple-root indices (0-based); default: every subset")->delimiter(',');

  auto* ce = app.add_subcommand("counterexample", "The GL3 point x = e_1/2, r = 1, end to end");
  ce->add_option("--q", qspec, "'symbolic' or a prime power to evaluate the indices at");

  auto* sp = app.add_subcommand("spade-check", "Iwahori factorization of G_{x,r} in GL_n");
  sp->add_option("--datum", datum)->required();
  sp->add_option("--x", x)->required();
  sp->add_option("--r", r)->required();
  sp->add_option("--blocks", blocks, "Levi block sizes, e.g. 1,2; default: every standard Levi");
  sp->add_option("--p", primes, "Residue characteristics for the exhaustive check")->delimiter(',');
  sp->add_option("--opposite", sign, "Which unipotent radical plays N^-")->check(CLI::IsMember({"lower", "upper", "both"}));

  auto* cl = app.add_subcommand("clifford", "Clifford-theory checks over a finite-group catalog");
  cl->add_option("--catalog", catalog, "'builtin' or a catalog JSON file");
  cl->add_option("--check", check)->check(CLI::IsMember({"all", "lemmas", "transfer", "center", "commutativity"}));

  auto* tc = app.add_subcommand("torus-center", "Orbit sums in the depth-one torus Hecke algebra");
  tc->add_option("--datum", datum)->required();
  tc->add_option("--q", qspec, "Residue field size")->required();
  tc->add_option("--radius", radius, "Sup-norm truncation radius")->required();
  tc->add_option("--check", check)->check(CLI::IsMember({"all", "roc", "dimension"}));

  auto* ic = app.add_subcommand("iwahori-center", "Center of the Iwahori-Hecke algebra on a truncation");
  ic->add_option("--datum", datum)->required();
  ic->add_option("--radius", radius)->required();
  ic->add_option("--v0", v0, "Specialization point for the kernel computation");

  auto* va = app.add_subcommand("verify-all", "Run every acceptance suite");
  va->add_option("--criterion", criteria, "Restrict to these criteria (1-7)")->delimiter(',')->check(CLI::Range(1, kCriteria));
  va->add_flag("--no-timing", no_timing, "Omit wall-time fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Outcome o;
    if (*rd) o = cmd_rootdatum(datum);
    else if (*hc) o = cmd_heart(datum, x, r, theta, jobs);
    else if (*ce) o = cmd_counterexample(qspec);
    else if (*sp) o = cmd_spade(datum, x, r, blocks, primes, sign, jobs);
    else if (*cl) o = cmd_clifford(catalog, check, jobs);
    else if (*tc) o = cmd_torus(datum, qspec, radius, check);
    else if (*ic) o = cmd_iwahori(datum, radius, v0);
    else if (*va) o = cmd_verify_all(criteria, !no_timing, jobs);
    if (format == "json")
      out << o.report.dump(2) << "\n";
    else
      out << o.text;
    return o.failed ? kExitFail : 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace hck
