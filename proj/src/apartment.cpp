#include "hck/apartment.hpp"

#include <algorithm>
#include <set>

#include "hck/error.hpp"
#include "hck/linalg.hpp"
#include "hck/parallel.hpp"

namespace hck {

ApartmentPoint ApartmentPoint::parse(const RootDatum& datum, std::string_view text) {
  ApartmentPoint x{parse_rational_list(text)};
  if (x.offset.size() != datum.rank())
    throw InputError("point has " + std::to_string(x.offset.size()) + " coordinates but " + datum.name() +
                     " has rank " + std::to_string(datum.rank()));
  return x;
}

ApartmentPoint ApartmentPoint::origin(const RootDatum& datum) {
  return ApartmentPoint{std::vector<Rational>(datum.rank(), Rational(0))};
}

std::string to_string(const ApartmentPoint& x) { return to_string(x.offset); }

Rational evaluate(std::span<const std::int64_t> character, const ApartmentPoint& x) {
  Rational v = 0;
  for (std::size_t i = 0; i < character.size(); ++i)
    if (character[i] != 0) v += Rational(static_cast<long>(character[i])) * x.offset[i];
  return v;
}

ApartmentPoint act(const WeylElement& w, const ApartmentPoint& x) {
  const std::size_t n = x.offset.size();
  ApartmentPoint y{std::vector<Rational>(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.action(i, j) != 0) y.offset[i] += Rational(static_cast<long>(w.action(i, j))) * x.offset[j];
  return y;
}

Rational AffineRoot::evaluate(const RootDatum& datum, const ApartmentPoint& x) const {
  return hck::evaluate(datum.root(gradient).character, x) + Rational(static_cast<long>(level));
}

std::int64_t threshold(const RootDatum& datum, std::size_t root, const ApartmentPoint& x, const Rational& r) {
  return ceil_to_int(r - evaluate(datum.root(root).character, x));
}

std::string PointClass::label() const {
  switch (kind) {
    case PointKind::Special: return "SPECIAL";
    case PointKind::AlcoveInterior: return "ALCOVE_INTERIOR";
    case PointKind::Facet: return "FACET(" + std::to_string(dimension) + ")";
  }
  return "?";
}

PointClass classify_point(const RootDatum& datum, const ApartmentPoint& x) {
  const std::size_t ss = datum.semisimple_rank();
  RationalMatrix walls(0, datum.rank());
  std::size_t integral = 0;
  for (const auto& root : datum.roots()) {
    if (!root.positive || !is_integral(evaluate(root.character, x))) continue;
    ++integral;
    std::vector<Rational> row;
    for (auto c : root.character) row.emplace_back(static_cast<long>(c));
    walls.append_row(row);
  }
  const std::size_t positives = datum.roots().size() / 2;
  if (integral == 0) return {PointKind::AlcoveInterior, ss};
  if (integral == positives) return {PointKind::Special, 0};
  return {PointKind::Facet, ss - rank(walls)};
}

bool in_base_alcove_closure(const RootDatum& datum, const ApartmentPoint& x) {
  for (const auto& root : datum.roots()) {
    if (!root.positive) continue;
    const Rational v = evaluate(root.character, x);
    if (v < 0 || v > 1) return false;
  }
  return true;
}

IntMatrix FiltrationProfile::gl_bounds(const RootDatum& datum) const {
  if (!datum.is_general_linear()) throw InputError("bound matrices need a GL_n datum, got " + datum.name());
  const std::size_t n = datum.rank();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diagonal_bound();
  for (std::size_t k = 0; k < datum.roots().size(); ++k) {
    const auto& c = datum.root(k).character;
    std::size_t i = n, j = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (c[t] == 1) i = t;
      if (c[t] == -1) j = t;
    }
    m(i, j) = thresholds[k];
  }
  return m;
}

FiltrationProfile filtration_profile(const RootDatum& datum, const ApartmentPoint& x, const Rational& r) {
  if (r <= 0) throw InputError("depth r must be positive, got " + to_string(r));
  FiltrationProfile p{r, {}};
  p.thresholds.reserve(datum.roots().size());
  for (std::size_t k = 0; k < datum.roots().size(); ++k) p.thresholds.push_back(threshold(datum, k, x, r));
  return p;
}

std::vector<Theta> all_thetas(const RootDatum& datum) {
  const std::size_t ss = datum.semisimple_rank();
  std::vector<Theta> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ss); ++mask) {
    Theta t;
    for (std::size_t i = 0; i < ss; ++i)
      if (mask & (std::size_t{1} << i)) t.push_back(i);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Distinct w2 over all w in W_0, in order of first appearance.
std::vector<std::size_t> coset_representatives(const WeylGroup& group, const Theta& theta) {
  std::vector<std::size_t> reps;
  std::set<std::size_t> seen;
  for (std::size_t w = 0; w < group.size(); ++w) {
    const auto w2 = coset_decompose(group, w, theta).second;
    if (seen.insert(w2).second) reps.push_back(w2);
  }
  return reps;
}

}  // namespace

HeartVerdict heart_condition1_check(const WeylGroup& group, const ApartmentPoint& x, const Rational& r,
                                    const Theta& theta) {
  if (r <= 0) throw InputError("depth r must be positive, got " + to_string(r));
  const RootDatum& d = group.datum();
  const auto levi_roots = d.parabolic_roots(theta);
  HeartVerdict verdict;
  for (auto w2 : coset_representatives(group, theta)) {
    const ApartmentPoint y = act(group[w2], x);
    for (auto a : levi_roots) {
      const auto tx = threshold(d, a, x, r);
      const auto ty = threshold(d, a, y, r);
      if (tx != ty) verdict.witnesses.push_back({theta, w2, a, tx, ty});
    }
  }
  if (!verdict.witnesses.empty()) verdict.status = HeartStatus::Mismatch;
  return verdict;
}

Rational key_quantity(const WeylGroup& group, std::size_t w2, std::size_t root, const ApartmentPoint& x) {
  const auto& a = group.datum().root(root).character;
  const auto moved = group[group.inverse(w2)].apply_to_character(a);
  return evaluate(moved, x) - evaluate(a, x);
}

std::vector<KeyInequalityFailure> key_inequality_failures(const WeylGroup& group, const ApartmentPoint& x,
                                                          const Theta& theta) {
  const RootDatum& d = group.datum();
  std::vector<KeyInequalityFailure> out;
  for (auto w2 : coset_representatives(group, theta))
    for (auto a : d.parabolic_roots(theta)) {
      if (!d.root(a).positive) continue;
      Rational v = key_quantity(group, w2, a, x);
      if (v < 0 || v >= 1) out.push_back({theta, w2, a, std::move(v)});
    }
  return out;
}

std::vector<PointReport> heart_scan(const WeylGroup& group, const Rational& r,
                                    const std::vector<ApartmentPoint>& grid, std::size_t jobs) {
  const RootDatum& d = group.datum();
  for (const auto& x : grid) {
    if (x.offset.size() != d.rank()) throw InputError("grid point " + to_string(x) + " has the wrong rank");
    if (!in_base_alcove_closure(d, x))
      throw InputError("grid point " + to_string(x) + " is outside the closed base alcove");
  }
  const auto thetas = all_thetas(d);
  std::vector<PointReport> out(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    PointReport rep{grid[i], classify_point(d, grid[i]), {}};
    for (const auto& t : thetas) rep.verdicts.emplace_back(t, heart_condition1_check(group, grid[i], r, t));
    out[i] = std::move(rep);
  });
  return out;
}

namespace {

std::vector<Rational> unit_interval_values(int max_denominator) {
  std::set<Rational> values;
  for (int den = 1; den <= max_denominator; ++den)
    for (int k = 0; k <= den; ++k) {
      Rational v(k, den);
      v.canonicalize();
      values.insert(v);
    }
  return {values.begin(), values.end()};
}

}  // namespace

std::vector<ApartmentPoint> base_alcove_grid(const RootDatum& datum, int max_denominator) {
  if (max_denominator < 1) throw InputError("grid denominator must be positive");
  const auto values = unit_interval_values(max_denominator);
  const std::size_t n = datum.rank();
  // Free coordinates: x_1..x_{n-1} for GL_n (x_n = 0), the semisimple ones otherwise.
  const std::size_t free = datum.is_general_linear() ? n - 1 : datum.semisimple_rank();
  std::vector<ApartmentPoint> out;
  std::vector<std::size_t> idx(free, 0);
  while (true) {
    ApartmentPoint x = ApartmentPoint::origin(datum);
    for (std::size_t i = 0; i < free; ++i) x.offset[i] = values[idx[i]];
    if (in_base_alcove_closure(datum, x)) out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < free && idx[k] + 1 == values.size()) idx[k++] = 0;
    if (k == free) break;
    ++idx[k];
  }
  return out;
}

std::vector<ApartmentPoint> alcove_interior_grid(const RootDatum& datum, int max_denominator) {
  std::vector<ApartmentPoint> out;
  for (auto& x : base_alcove_grid(datum, max_denominator))
    if (classify_point(datum, x).kind == PointKind::AlcoveInterior) out.push_back(std::move(x));
  return out;
}

namespace {

nlohmann::json rationals_json(const std::vector<Rational>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

}  // namespace

nlohmann::json to_json(const RootDatum& datum, const WeylGroup& group, const HeartVerdict& verdict) {
  nlohmann::json j;
  j["status"] = verdict.status == HeartStatus::ProvenCondition1 ? "PROVEN_CONDITION_1" : "MISMATCH";
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : verdict.witnesses)
    ws.push_back({{"theta", w.theta},
                  {"w2_word", group[w.w2].word},
                  {"root", datum.root(w.root).character},
                  {"threshold_at_x", w.at_x},
                  {"threshold_at_w2x", w.at_w2x}});
  j["witnesses"] = ws;
  return j;
}

nlohmann::json to_json(const RootDatum& datum, const WeylGroup& group, const PointReport& report) {
  nlohmann::json j;
  j["x"] = rationals_json(report.x.offset);
  j["class"] = report.point_class.label();
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& [theta, v] : report.verdicts) {
    auto e = to_json(datum, group, v);
    e["theta"] = theta;
    vs.push_back(std::move(e));
  }
  j["verdicts"] = vs;
  return j;
}

}  // namespace hck
