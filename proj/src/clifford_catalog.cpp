#include <algorithm>
#include <limits>
#include <memory>

#include "hck/clifford.hpp"
#include "hck/error.hpp"

namespace hck {

namespace {

using FieldPtr = std::shared_ptr<const CyclotomicField>;
constexpr long kZ = std::numeric_limits<long>::min();  // a zero entry in monomial()

// Entries are exponents of zeta_M, or kZ for 0.
CycMatrix monomial(const FieldPtr& f, const std::vector<std::vector<long>>& e) {
  CycMatrix m(f, e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[i][j] != kZ) m(i, j) = Cyc::root_of_unity(f, e[i][j]);
  return m;
}

CycMatrix scalar(const FieldPtr& f, long k, std::size_t d = 1) {
  return CycMatrix::identity(f, d) * Cyc::root_of_unity(f, k);
}

Subgroup all_of(const FiniteGroup& g) {
  Subgroup s(g.order());
  for (Elem x = 0; x < g.order(); ++x) s[x] = x;
  return s;
}

struct Builder {
  FieldPtr f;
  long unit(long n) const { return f->conductor() / n; }  // exponent of a primitive n-th root
  CycMatrix swap() const { return monomial(f, {{kZ, 0}, {0, kZ}}); }
  CycMatrix rot(long n) const { return monomial(f, {{unit(n), kZ}, {kZ, -unit(n)}}); }
  CycMatrix quat_j() const { return monomial(f, {{kZ, 0}, {unit(2), kZ}}); }
};

CliffordModel make(std::string name, std::shared_ptr<FiniteGroup> g, FieldPtr f, const std::vector<Elem>& n_gens,
                   const std::vector<Elem>& jt_gens, const std::vector<CycMatrix>& images, std::size_t rho_block) {
  CliffordModel m;
  m.name = std::move(name);
  m.field = f;
  m.normal = n_gens.empty() ? all_of(*g) : generate(*g, n_gens);
  m.rho_tilde = Representation::from_generators(*g, f, jt_gens, images);
  if (rho_block > 0) m.rho = m.rho_tilde.sub_block(intersect(m.rho_tilde.domain(), m.normal), rho_block);
  m.group = std::move(g);
  return m;
}

}  // namespace

std::vector<CliffordModel> builtin_catalog() {
  std::vector<CliffordModel> out;

  {  // S3 with its 2-dimensional representation, and the trivial character
    Builder b{std::make_shared<CyclotomicField>(6)};
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices({b.rot(3), b.swap()}));
    const auto& s = g->generators();
    out.push_back(make("S3, N = J~ = G, 2-dim", g, b.f, {}, s, {b.rot(3), b.swap()}, 0));
    out.push_back(make("S3, N = A3, 2-dim", g, b.f, {s[0]}, s, {b.rot(3), b.swap()}, 1));
    out.push_back(make("S3, N = J~ = G, trivial", g, b.f, {}, s, {scalar(b.f, 0), scalar(b.f, 0)}, 0));
  }
  {  // D8 = Heisenberg group mod 2
    Builder b{std::make_shared<CyclotomicField>(4)};
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices({b.rot(4), b.swap()}));
    const auto& s = g->generators();
    out.push_back(make("D8, N = C4", g, b.f, {s[0]}, s, {b.rot(4), b.swap()}, 1));
    out.push_back(make("D8 (Heisenberg mod 2), N = center", g, b.f, {g->word({0, 0})}, s, {b.rot(4), b.swap()}, 1));
  }
  {
    Builder b{std::make_shared<CyclotomicField>(4)};
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices({b.rot(4), b.quat_j()}));
    const auto& s = g->generators();
    out.push_back(make("Q8, N = center", g, b.f, {g->word({0, 0})}, s, {b.rot(4), b.quat_j()}, 1));
    out.push_back(make("Q8, N = C4", g, b.f, {s[0]}, s, {b.rot(4), b.quat_j()}, 1));
  }
  {  // Heisenberg group mod 3 in its Schroedinger model
    Builder b{std::make_shared<CyclotomicField>(3)};
    const CycMatrix x = monomial(b.f, {{kZ, kZ, 0}, {0, kZ, kZ}, {kZ, 0, kZ}});
    const CycMatrix z = monomial(b.f, {{0, kZ, kZ}, {kZ, 1, kZ}, {kZ, kZ, 2}});
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices({x, z}));
    const auto& s = g->generators();
    const Elem c = g->word({0, 1, 0, 0, 1, 1});  // x z x^-1 z^-1
    out.push_back(make("Heisenberg mod 3, N = center", g, b.f, {c}, s, {x, z}, 1));
    out.push_back(make("Heisenberg mod 3, N = <z, center>", g, b.f, {c, s[1]}, s, {x, z}, 1));
  }
  {
    Builder b{std::make_shared<CyclotomicField>(10)};
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices({b.rot(5), b.swap()}));
    const auto& s = g->generators();
    out.push_back(make("D10, N = C5", g, b.f, {s[0]}, s, {b.rot(5), b.swap()}, 1));
  }
  {  // J~ proper: pi is induced from a character of the rotation subgroup
    Builder b{std::make_shared<CyclotomicField>(8)};
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices({b.rot(8), b.swap()}));
    const auto& s = g->generators();
    out.push_back(make("D16, N = D8, J~ = C8", g, b.f, {g->word({0, 0}), s[1]}, {s[0]}, {scalar(b.f, 1)}, 0));
  }
  {
    Builder b{std::make_shared<CyclotomicField>(42)};
    // On 9 points: a = 7-cycle, t = (x -> 2x mod 7), c swaps the last two.
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(
        {{1, 2, 3, 4, 5, 6, 0, 7, 8}, {0, 2, 4, 6, 1, 3, 5, 7, 8}, {0, 1, 2, 3, 4, 5, 6, 8, 7}}));
    const auto& s = g->generators();
    out.push_back(make("F21 x C2, N = C7, J~ = C7 x C2", g, b.f, {s[0]}, {s[0], s[2]},
                       {scalar(b.f, b.unit(7)), scalar(b.f, b.unit(2))}, 0));
  }
  {
    Builder b{std::make_shared<CyclotomicField>(84)};
    const FiniteGroup q8 = FiniteGroup::from_matrices({b.rot(4), b.quat_j()});
    const FiniteGroup f21 = FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}});
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::direct_product(q8, f21));
    const auto& s = g->generators();  // i, j, a, t
    out.push_back(make("Q8 x F21, N = Z(Q8) x C7, J~ = Q8 x C7", g, b.f, {g->word({0, 0}), s[2]},
                       {s[0], s[1], s[2]}, {b.rot(4), b.quat_j(), scalar(b.f, b.unit(7), 2)}, 1));
  }
  {
    Builder b{std::make_shared<CyclotomicField>(4)};
    const FiniteGroup q8 = FiniteGroup::from_matrices({b.rot(4), b.quat_j()});
    const FiniteGroup c4 = FiniteGroup::from_permutations({{1, 2, 3, 0}});
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::direct_product(q8, c4));
    const auto& s = g->generators();
    out.push_back(make("Q8 x C4, N = Z(Q8)", g, b.f, {g->word({0, 0})}, s,
                       {b.rot(4), b.quat_j(), scalar(b.f, 1, 2)}, 1));
  }
  {  // real Pauli group on two qubits, extraspecial of order 32
    Builder b{std::make_shared<CyclotomicField>(4)};
    const CycMatrix px = monomial(b.f, {{kZ, 0}, {0, kZ}});
    const CycMatrix pz = monomial(b.f, {{0, kZ}, {kZ, 2}});
    const CycMatrix id = CycMatrix::identity(b.f, 2);
    const std::vector<CycMatrix> gens{px.kron(id), pz.kron(id), id.kron(px), id.kron(pz)};
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices(gens));
    out.push_back(make("Pauli group on 2 qubits, N = center", g, b.f, {g->word({0, 1, 0, 1})}, g->generators(), gens, 1));
  }
  {  // I_G(rho) escapes J~, so the theorems' hypotheses fail
    Builder b{std::make_shared<CyclotomicField>(12)};
    const FiniteGroup q8 = FiniteGroup::from_matrices({b.rot(4), b.quat_j()});
    const FiniteGroup c3 = FiniteGroup::from_permutations({{1, 2, 0}});
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::direct_product(q8, c3));
    const auto& s = g->generators();
    out.push_back(make("Q8 x C3, N = Z(Q8) x C3, J~ = Q8", g, b.f, {g->word({0, 0}), s[2]}, {s[0], s[1]},
                       {b.rot(4), b.quat_j()}, 1));
  }
  return out;
}

namespace {

FieldPtr field_for(const nlohmann::json& e, const FiniteGroup* g) {
  if (e.contains("conductor")) return std::make_shared<CyclotomicField>(e.at("conductor").get<int>());
  if (!g) throw InputError("matrix groups need an explicit conductor");
  return std::make_shared<CyclotomicField>(static_cast<int>(g->exponent()));
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("expected an integer or a rational string, got " + v.dump());
}

Cyc json_cyc(const FieldPtr& f, const nlohmann::json& v) {
  if (!v.is_array()) return Cyc(f, json_rational(v));
  std::vector<Rational> c;
  for (const auto& x : v) c.push_back(json_rational(x));
  return Cyc::from_powers(f, c);
}

CycMatrix json_matrix(const FieldPtr& f, const nlohmann::json& v) {
  const std::size_t d = v.size();
  CycMatrix m(f, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (v[i].size() != d) throw InputError("matrix is not square");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = json_cyc(f, v[i][j]);
  }
  return m;
}

Elem json_element(const FiniteGroup& g, const nlohmann::json& v) {
  if (v.is_number_integer()) {
    const long x = v.get<long>();
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) throw InputError("element index out of range");
    return static_cast<Elem>(x);
  }
  if (v.is_object() && v.contains("word")) return g.word(v.at("word").get<std::vector<std::size_t>>());
  throw InputError("element must be an index or {\"word\": [...]}, got " + v.dump());
}

std::vector<Elem> json_elements(const FiniteGroup& g, const nlohmann::json& v) {
  std::vector<Elem> out;
  for (const auto& x : v) out.push_back(json_element(g, x));
  return out;
}

Subgroup json_subgroup(const FiniteGroup& g, const nlohmann::json& v) {
  if (v.is_string() && v.get<std::string>() == "all") return all_of(g);
  if (v.contains("generators")) return generate(g, json_elements(g, v.at("generators")));
  if (v.contains("elements")) {
    Subgroup s = json_elements(g, v.at("elements"));
    std::sort(s.begin(), s.end());
    if (!is_subgroup(g, s)) throw InputError("element list is not a subgroup");
    return s;
  }
  throw InputError("subgroup must be \"all\", {\"generators\": ...} or {\"elements\": ...}");
}

Representation json_representation(const FiniteGroup& g, const FieldPtr& f, const nlohmann::json& v) {
  std::vector<CycMatrix> images;
  for (const auto& m : v.at("images")) images.push_back(json_matrix(f, m));
  return Representation::from_generators(g, f, json_elements(g, v.at("generators")), images);
}

}  // namespace

std::vector<CliffordModel> load_catalog(const nlohmann::json& doc) {
  std::vector<CliffordModel> out;
  try {
    for (const auto& e : doc.at("entries")) {
      CliffordModel m;
      m.name = e.value("name", "entry " + std::to_string(out.size()));
      const auto& gs = e.at("group");
      std::shared_ptr<FiniteGroup> g;
      if (gs.contains("permutations")) {
        g = std::make_shared<FiniteGroup>(
            FiniteGroup::from_permutations(gs.at("permutations").get<std::vector<std::vector<int>>>()));
      } else if (gs.contains("table")) {
        g = std::make_shared<FiniteGroup>(FiniteGroup::from_table(gs.at("table").get<std::vector<std::vector<Elem>>>()));
      } else if (gs.contains("matrices")) {
        m.field = field_for(e, nullptr);
        std::vector<CycMatrix> mats;
        for (const auto& x : gs.at("matrices")) mats.push_back(json_matrix(m.field, x));
        g = std::make_shared<FiniteGroup>(FiniteGroup::from_matrices(mats));
      } else {
        throw InputError("group needs \"permutations\", \"table\" or \"matrices\"");
      }
      if (!m.field) m.field = field_for(e, g.get());
      if (static_cast<std::size_t>(m.field->conductor()) % g->exponent() != 0)
        throw InputError(m.name + ": conductor must be a multiple of the group exponent " +
                         std::to_string(g->exponent()));
      m.normal = json_subgroup(*g, e.at("normal"));
      m.rho_tilde = json_representation(*g, m.field, e.at("rho_tilde"));
      if (e.contains("rho")) {
        const auto& r = e.at("rho");
        if (r.contains("block"))
          m.rho = m.rho_tilde.sub_block(intersect(m.rho_tilde.domain(), m.normal), r.at("block").get<std::size_t>());
        else
          m.rho = json_representation(*g, m.field, r);
      }
      m.group = std::move(g);
      out.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed catalog: ") + ex.what());
  }
  return out;
}

}  // namespace hck
