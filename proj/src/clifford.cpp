#include "hck/clifford.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hck/error.hpp"
#include "hck/parallel.hpp"

namespace hck {

namespace {

std::size_t as_count(const Rational& r, const char* what) {
  if (r.get_den() != 1 || r < 0) throw InternalError(std::string(what) + " is not a non-negative integer: " + to_string(r));
  return r.get_num().get_ui();
}

}  // namespace

RestrictionDecomposition restrict_decompose(const FiniteGroup& g, const Subgroup& big, const Subgroup& small,
                                            const ClassFunction& sigma_tilde, const ClassFunction& sigma) {
  if (!is_normal_in(g, small, big)) throw InputError("restrict_decompose: subgroup is not normal");
  const Rational norm = inner_product(sigma_tilde, sigma_tilde);
  if (norm != 1) throw InputError("restrict_decompose: representation is reducible, <chi,chi> = " + to_string(norm));
  const ClassFunction res = restrict_to(sigma_tilde, small);
  RestrictionDecomposition out;
  out.m = as_count(inner_product(res, sigma), "multiplicity");
  if (out.m == 0) throw InputError("restrict_decompose: sigma is not a constituent of the restriction");
  for (Elem x : big) {
    ClassFunction c = conjugate(g, sigma, x);
    if (c == sigma) out.inertia.push_back(x);
    if (std::find(out.orbit.begin(), out.orbit.end(), c) == out.orbit.end()) out.orbit.push_back(std::move(c));
  }
  ClassFunction sum = out.orbit.front();
  for (std::size_t i = 1; i < out.orbit.size(); ++i) sum = sum + out.orbit[i];
  out.decomposition_exact = (res == scale(sum, Rational(out.m)));
  out.dimension_identity = sigma_tilde.degree() == sigma.degree() * Rational(out.orbit.size() * out.m);
  return out;
}

std::vector<std::vector<long>> quotient_characters(const FiniteGroup& g, const Subgroup& big, const Subgroup& small,
                                                   int conductor) {
  if (!is_normal_in(g, small, big)) throw InputError("quotient_characters: subgroup is not normal");
  if (!quotient_is_abelian(g, big, small)) throw InputError("quotient_characters: quotient is not abelian");
  const auto in_small = membership(g, small);
  const auto in_big = membership(g, big);

  // Greedy generators of big/small with their orders modulo small.
  std::vector<Elem> gens;
  std::vector<long> orders;
  {
    std::vector<Elem> span_gens(small.begin(), small.end());
    Subgroup span = small;
    for (Elem x : big) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      gens.push_back(x);
      long k = 1;
      for (Elem y = x; !in_small[y]; y = g.mul(y, x)) ++k;
      orders.push_back(k);
      if (conductor % k != 0) throw InputError("conductor is not a multiple of the quotient exponent");
      span_gens.push_back(x);
      span = generate(g, span_gens);
    }
  }

  std::vector<std::vector<long>> out;
  std::vector<long> choice(gens.size(), 0);
  while (true) {
    std::vector<long> val(g.order(), -1);
    std::vector<Elem> queue(small.begin(), small.end());
    for (Elem h : small) val[h] = 0;
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const Elem x = queue[i];
      auto step = [&](Elem s, long e) {
        const Elem y = g.mul(x, s);
        const long v = (val[x] + e) % conductor;
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      };
      for (std::size_t k = 0; k < gens.size() && ok; ++k) step(gens[k], choice[k] * (conductor / orders[k]));
      for (Elem h : small)
        if (ok) step(h, 0);
    }
    if (ok) {
      for (Elem x : big)
        if (val[x] < 0) throw InternalError("quotient character not defined on every element");
      for (std::size_t x = 0; x < val.size(); ++x)
        if (!in_big[x]) val[x] = 0;
      out.push_back(std::move(val));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == orders[k]) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  if (out.size() != big.size() / small.size())
    throw InternalError("found " + std::to_string(out.size()) + " characters of an abelian group of order " +
                        std::to_string(big.size() / small.size()));
  return out;
}

TwistGroup twist_group(const FiniteGroup& g, const Subgroup& big, const Subgroup& small,
                       const ClassFunction& sigma_tilde) {
  const auto field = sigma_tilde.degree().field();
  const auto all = quotient_characters(g, big, small, field->conductor());
  TwistGroup out;
  out.quotient_order = all.size();
  for (const auto& nu : all) {
    bool fixes = true;
    for (Elem x : big)
      if (!(sigma_tilde(x) * Cyc::root_of_unity(field, nu[x]) == sigma_tilde(x))) {
        fixes = false;
        break;
      }
    if (fixes) out.characters.push_back(nu);
  }
  for (Elem x : big) {
    bool in_kernels = true;
    for (const auto& nu : out.characters)
      if (nu[x] % field->conductor() != 0) in_kernels = false;
    if (in_kernels) out.dagger.push_back(x);
  }
  return out;
}

StabilizerSearch maximal_stabilizer(const FiniteGroup& g, const Subgroup& small, const Subgroup& inertia,
                                    const Representation& sigma) {
  const auto field = sigma.field();
  const std::size_t d = sigma.degree();
  const auto in_small = membership(g, small);

  // Cosets of Int/H, labelled by their smallest element.
  std::vector<long> coset(g.order(), -1);
  std::vector<Elem> reps;
  for (Elem x : inertia) {
    if (coset[x] >= 0) continue;
    for (Elem h : small) coset[g.mul(x, h)] = static_cast<long>(reps.size());
    reps.push_back(x);
  }
  const std::size_t q = reps.size();
  auto qmul = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(coset[g.mul(reps[a], reps[b])]); };

  // A_s sigma(x) = sigma(s x s^{-1}) A_s, built by averaging a matrix unit.
  std::vector<CycMatrix> intertwiner(q);
  for (std::size_t c = 0; c < q; ++c) {
    const Elem s = reps[c];
    bool found = false;
    for (std::size_t i = 0; i < d && !found; ++i)
      for (std::size_t j = 0; j < d && !found; ++j) {
        CycMatrix a(field, d);
        for (Elem h : small) {
          const CycMatrix& left = sigma(g.conj(s, h));
          const CycMatrix& right = sigma(g.inv(h));
          for (std::size_t r = 0; r < d; ++r) {
            if (left(r, i).is_zero()) continue;
            for (std::size_t t = 0; t < d; ++t)
              if (!right(j, t).is_zero()) a(r, t) += left(r, i) * right(j, t);
          }
        }
        if (!a.is_zero()) {
          intertwiner[c] = std::move(a);
          found = true;
        }
      }
    if (!found) throw InternalError("element of the inertia group admits no intertwiner");
  }

  // beta(s,t) = k with A_s A_t = zeta^k sigma([s,t]) A_t A_s.
  const int mcond = field->conductor();
  std::vector<std::vector<int>> beta(q, std::vector<int>(q, -1));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      const Elem s = reps[a], t = reps[b];
      const Elem comm = g.mul(g.mul(s, t), g.mul(g.inv(s), g.inv(t)));
      if (!in_small[comm]) throw InternalError("Int/H is not abelian");
      const CycMatrix lhs = intertwiner[a] * intertwiner[b];
      const CycMatrix rhs = sigma(comm) * (intertwiner[b] * intertwiner[a]);
      for (int k = 0; k < mcond; ++k)
        if (lhs == rhs * Cyc::root_of_unity(field, k)) {
          beta[a][b] = k;
          break;
        }
      if (beta[a][b] < 0) throw InternalError("commutator of intertwiners is not a root of unity");
    }

  StabilizerSearch out;
  out.bicharacter_ok = true;
  for (std::size_t a = 0; a < q; ++a) {
    if (beta[a][a] != 0) out.bicharacter_ok = false;
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        if (beta[qmul(a, b)][c] != (beta[a][c] + beta[b][c]) % mcond) out.bicharacter_ok = false;
  }

  // Every subgroup of the abelian group Int/H, by repeated one-step extension.
  auto close = [&](std::vector<std::size_t> s) {
    std::vector<char> in(q, 0);
    for (auto x : s) in[x] = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const std::size_t p = qmul(s[i], s[j]);
        if (!in[p]) {
          in[p] = 1;
          s.push_back(p);
        }
      }
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<std::vector<std::size_t>> subgroups{{0}};  // coset 0 is H itself
  std::vector<std::vector<std::size_t>> frontier(subgroups.begin(), subgroups.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier)
      for (std::size_t c = 0; c < q; ++c) {
        if (std::binary_search(s.begin(), s.end(), c)) continue;
        auto t = s;
        t.push_back(c);
        t = close(std::move(t));
        if (subgroups.insert(t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  out.subgroups_scanned = subgroups.size();

  std::vector<std::vector<std::size_t>> isotropic;
  for (const auto& s : subgroups) {
    bool iso = true;
    for (auto a : s)
      for (auto b : s)
        if (beta[a][b] != 0) iso = false;
    if (iso) isotropic.push_back(s);
  }
  std::optional<Subgroup> best;
  for (const auto& s : isotropic) {
    bool maximal = true;
    for (const auto& t : isotropic)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) maximal = false;
    if (!maximal) continue;
    ++out.maximal_candidates;
    Subgroup lift;
    for (Elem x : inertia)
      if (std::binary_search(s.begin(), s.end(), static_cast<std::size_t>(coset[x]))) lift.push_back(x);
    if (!best || lift < *best) best = std::move(lift);
  }
  out.s_h = *best;
  return out;
}

IntertwiningSet intertwining_set(const FiniteGroup& g, const Subgroup& j, const ClassFunction& rho) {
  IntertwiningSet out;
  std::vector<char> seen(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cosetset;
    for (Elem a : j)
      for (Elem b : j) {
        const Elem y = g.mul(g.mul(a, x), b);
        if (!seen[y]) {
          seen[y] = 1;
          cosetset.push_back(y);
        }
      }
    const ClassFunction conj = conjugate(g, rho, x);
    const Subgroup k = intersect(j, conj.domain);
    DoubleCoset dc;
    dc.representative = x;
    dc.size = cosetset.size();
    dc.hom_dimension = inner_product(restrict_to(rho, k), restrict_to(conj, k));
    if (dc.hom_dimension != 0) out.support.insert(out.support.end(), cosetset.begin(), cosetset.end());
    out.double_cosets.push_back(std::move(dc));
  }
  std::sort(out.support.begin(), out.support.end());
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool CliffordReport::lemmas_hold() const {
  return genclif_dimension && genclif_decomposition && clifbis_chain && clifbis_twist && bicharacter_ok && frobenius;
}

bool CliffordReport::passed() const {
  return lemmas_hold() && transfer != CheckStatus::Fail && center != CheckStatus::Fail &&
         commutativity != CheckStatus::Fail;
}

CliffordReport evaluate(const CliffordModel& model) {
  const FiniteGroup& g = *model.group;
  Subgroup all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  const Subgroup& n = model.normal;
  const Subgroup& jt = model.rho_tilde.domain();
  if (!is_subgroup(g, n) || !is_normal_in(g, n, all)) throw InputError(model.name + ": N is not a normal subgroup");
  if (!quotient_is_abelian(g, all, n)) throw InputError(model.name + ": G/N is not abelian");
  const Subgroup j = intersect(jt, n);

  const ClassFunction& chi_t = model.rho_tilde.character();
  Representation rho = model.rho ? *model.rho : model.rho_tilde.sub_block(j, model.rho_tilde.degree());
  if (rho.domain() != j) throw InputError(model.name + ": rho is not defined on J = J~ cap N");
  const ClassFunction& chi = rho.character();
  if (inner_product(chi, chi) != 1) throw InputError(model.name + ": rho is not irreducible");

  CliffordReport r;
  r.name = model.name;
  r.group_order = g.order();
  r.normal_order = n.size();
  r.j_tilde_order = jt.size();
  r.j_order = j.size();
  r.dim_rho_tilde = model.rho_tilde.degree();
  r.dim_rho = rho.degree();

  // Lemma-level checks on (J~, J, rho~, rho).
  const RestrictionDecomposition dec = restrict_decompose(g, jt, j, chi_t, chi);
  r.m = dec.m;
  r.orbit_size = dec.orbit.size();
  r.inertia = dec.inertia;
  r.genclif_dimension = dec.dimension_identity;
  r.genclif_decomposition = dec.decomposition_exact;

  const TwistGroup tw = twist_group(g, jt, j, chi_t);
  r.dagger = tw.dagger;
  r.twist_group_order = tw.characters.size();
  r.clifbis_twist = r.twist_group_order == index_of(jt, r.dagger);

  const StabilizerSearch st = maximal_stabilizer(g, j, r.inertia, rho);
  r.s_h = st.s_h;
  r.bicharacter_ok = st.bicharacter_ok;
  r.clifbis_chain = contains(r.s_h, r.dagger) && contains(r.inertia, r.s_h) &&
                    index_of(r.inertia, r.s_h) == r.m && index_of(r.s_h, r.dagger) == r.m;

  const ClassFunction pi = induce(g, chi_t, all);
  const ClassFunction psi = induce(g, chi, all);
  r.frobenius = inner_product(psi, pi) == inner_product(chi, restrict_to(pi, j));

  // Hypotheses of the multiplicity and center theorems.
  r.pi_irreducible = inner_product(pi, pi) == 1;
  const IntertwiningSet is = intertwining_set(g, j, chi);
  r.double_cosets = is.double_cosets.size();
  for (const auto& dc : is.double_cosets)
    if (dc.hom_dimension != 0) ++r.intertwining_double_cosets;
  r.intertwining_in_j_tilde = contains(jt, is.support);
  if (!r.pi_irreducible)
    r.hypothesis_failure = "Ind_{J~}^G rho~ is reducible, <pi,pi> = " + to_string(inner_product(pi, pi));
  else if (!r.intertwining_in_j_tilde)
    r.hypothesis_failure = "I_G(rho) is not contained in J~ (" + std::to_string(is.support.size()) + " of " +
                           std::to_string(g.order()) + " elements intertwine)";
  r.dim_end_mackey = 0;
  for (const auto& dc : is.double_cosets) r.dim_end_mackey += dc.hom_dimension;
  r.dim_end = inner_product(psi, psi);
  if (!r.hypothesis_failure.empty()) return r;

  // Multiplicity transfer: Ind_J^N rho is an irreducible constituent of Res_N pi.
  const ClassFunction pi0 = induce(g, chi, n);
  const ClassFunction res_pi = restrict_to(pi, n);
  std::vector<ClassFunction> pi0_orbit;
  for (Elem x : all) {
    ClassFunction c = conjugate(g, pi0, x);
    if (std::find(pi0_orbit.begin(), pi0_orbit.end(), c) == pi0_orbit.end()) pi0_orbit.push_back(std::move(c));
  }
  bool transfer_ok = inner_product(pi0, pi0) == 1;
  r.m_normal_pi = as_count(inner_product(res_pi, pi0), "multiplicity in Res_N pi");
  ClassFunction orbit_sum = pi0_orbit.front();
  for (std::size_t i = 1; i < pi0_orbit.size(); ++i) orbit_sum = orbit_sum + pi0_orbit[i];
  transfer_ok = transfer_ok && res_pi == scale(orbit_sum, Rational(r.m_normal_pi));
  r.transfer = transfer_ok && r.m_normal_pi == r.m ? CheckStatus::Pass : CheckStatus::Fail;

  // Center: the constituents of Ind_J^G rho are the Ind_{J~}^G (rho~ (x) nu).
  std::vector<ClassFunction> twisted, constituents;
  for (const auto& nu : quotient_characters(g, jt, j, model.field->conductor())) {
    ClassFunction t = pointwise(g, chi_t, linear_character(model.field, g.order(), jt, nu));
    if (std::find(twisted.begin(), twisted.end(), t) != twisted.end()) continue;
    ClassFunction ind = induce(g, t, all);
    twisted.push_back(std::move(t));
    if (std::find(constituents.begin(), constituents.end(), ind) == constituents.end())
      constituents.push_back(std::move(ind));
  }
  bool center_ok = true;
  std::optional<ClassFunction> recon;
  r.constituents = 0;
  for (const auto& c : constituents) {
    if (inner_product(c, c) != 1) center_ok = false;
    const Rational mult = inner_product(psi, c);
    if (mult == 0) continue;
    ++r.constituents;
    ClassFunction part = scale(c, mult);
    recon = recon ? *recon + part : part;
  }
  center_ok = center_ok && recon && *recon == psi;
  r.dagger_index = index_of(r.dagger, j);
  r.center = center_ok && r.constituents == r.dagger_index ? CheckStatus::Pass : CheckStatus::Fail;

  // Commutativity, three conditions evaluated separately.
  r.commutative[0] = inner_product(res_pi, res_pi) == Rational(pi0_orbit.size());
  const ClassFunction res_t = restrict_to(chi_t, j);
  r.commutative[1] = inner_product(res_t, res_t) == Rational(dec.orbit.size());
  r.commutative[2] = r.dim_end_mackey == Rational(r.constituents);
  const bool coincide = r.commutative[0] == r.commutative[1] && r.commutative[1] == r.commutative[2];
  r.commutativity = coincide && center_ok && r.dim_end == r.dim_end_mackey ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

std::vector<CliffordReport> evaluate_catalog(const std::vector<CliffordModel>& models, std::size_t jobs) {
  std::vector<CliffordReport> out(models.size());
  parallel_for(models.size(), jobs, [&](std::size_t i) { out[i] = evaluate(models[i]); });
  return out;
}

nlohmann::json to_json(const CliffordReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["orders"] = {{"G", r.group_order}, {"N", r.normal_order}, {"J_tilde", r.j_tilde_order}, {"J", r.j_order}};
  j["dims"] = {{"rho_tilde", r.dim_rho_tilde}, {"rho", r.dim_rho}};
  j["m"] = r.m;
  j["orbit_size"] = r.orbit_size;
  j["Int"] = r.inertia.size();
  j["sH"] = r.s_h.size();
  j["daggerH"] = r.dagger.size();
  j["twist_group_order"] = r.twist_group_order;
  j["lemmas"] = {{"genclif_dimension", r.genclif_dimension},
                 {"genclif_decomposition", r.genclif_decomposition},
                 {"clifbis_index_chain", r.clifbis_chain},
                 {"clifbis_twist_group", r.clifbis_twist},
                 {"commutator_pairing", r.bicharacter_ok},
                 {"frobenius", r.frobenius}};
  j["hypotheses"] = {{"pi_irreducible", r.pi_irreducible},
                     {"intertwining_in_J_tilde", r.intertwining_in_j_tilde},
                     {"intertwining_double_cosets", r.intertwining_double_cosets},
                     {"double_cosets", r.double_cosets}};
  if (!r.hypothesis_failure.empty()) j["hypotheses"]["failure"] = r.hypothesis_failure;
  j["multiplicity_transfer"] = {{"status", to_string(r.transfer)}};
  j["center_dimension"] = {{"status", to_string(r.center)}};
  j["commutativity"] = {{"status", to_string(r.commutativity)}};
  if (r.transfer != CheckStatus::Skipped) {
    j["multiplicity_transfer"]["m_N_pi"] = r.m_normal_pi;
    j["multiplicity_transfer"]["m_J_rho_tilde"] = r.m;
    j["center_dimension"]["constituents"] = r.constituents;
    j["center_dimension"]["dagger_index"] = r.dagger_index;
    j["commutativity"]["res_N_pi_multiplicity_free"] = r.commutative[0];
    j["commutativity"]["res_J_rho_tilde_multiplicity_free"] = r.commutative[1];
    j["commutativity"]["endomorphisms_commutative"] = r.commutative[2];
    j["commutativity"]["dim_end"] = to_string(r.dim_end_mackey);
  }
  j["status"] = r.passed() ? "PASS" : "FAIL";
  return j;
}

}  // namespace hck
