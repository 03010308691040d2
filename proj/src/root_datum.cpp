#include "hck/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <regex>
#include <sstream>

#include "hck/error.hpp"

namespace hck {

namespace {

constexpr std::size_t kRootCap = 4096;

std::vector<IntVec> cartan_of(char type, std::size_t n) {
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (type) {
    case 'A':
      if (n < 1) throw InputError("A_n needs n >= 1");
      chain(n);
      break;
    case 'B':
      if (n < 2) throw InputError("B_n needs n >= 2");
      chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw InputError("C_n needs n >= 2");
      chain(n);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 3) throw InputError("D_n needs n >= 3");
      chain(n - 1);
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
      break;
    case 'G':
      if (n != 2) throw InputError("G_n exists only for n = 2");
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    case 'F':
      if (n != 4) throw InputError("F_n exists only for n = 4");
      chain(4);
      a[2][1] = -2;
      break;
    default:
      throw InputError(std::string("unsupported root system type '") + type + "'");
  }
  return a;
}

void check_cartan(const std::vector<IntVec>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InputError("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("Cartan matrix is not square (row " + std::to_string(i) + ")");
  }
  auto at = [](std::size_t i, std::size_t j, std::int64_t v) {
    return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(v);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw InputError("invalid Cartan matrix: diagonal " + at(i, i, a[i][i]) + ", expected 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw InputError("invalid Cartan matrix: positive off-diagonal " + at(i, j, a[i][j]));
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InputError("invalid Cartan matrix: " + at(i, j, a[i][j]) + " but " + at(j, i, a[j][i]));
      if (a[i][j] * a[j][i] > 3)
        throw InputError("non-crystallographic or affine Cartan matrix: " + at(i, j, a[i][j]) + " with " +
                         at(j, i, a[j][i]));
    }
  }
}

std::string type_name(char type, std::size_t n) { return std::string(1, type) + std::to_string(n); }

}  // namespace

RootDatum RootDatum::from_cartan(const std::vector<IntVec>& cartan, std::size_t central_rank, std::string name) {
  check_cartan(cartan);
  RootDatum d;
  const std::size_t ss = cartan.size();
  d.cartan_ = cartan;
  d.rank_ = ss + central_rank;
  if (name.empty()) {
    d.name_ = "cartan" + std::to_string(ss);
    if (central_rank > 0) d.name_ += "+z" + std::to_string(central_rank);
  } else {
    d.name_ = std::move(name);
  }
  for (std::size_t i = 0; i < ss; ++i) {
    Root r;
    r.character.assign(d.rank_, 0);
    r.character[i] = 1;
    r.coroot.assign(d.rank_, 0);
    for (std::size_t j = 0; j < ss; ++j) r.coroot[j] = cartan[i][j];
    r.coeffs.assign(ss, 0);
    r.coeffs[i] = 1;
    r.positive = true;
    d.roots_.push_back(std::move(r));
    d.simple_.push_back(i);
  }
  d.generate_roots();
  d.validate();
  return d;
}

RootDatum RootDatum::general_linear(std::size_t n) {
  if (n < 1) throw InputError("GL_n needs n >= 1");
  RootDatum d;
  d.general_linear_ = true;
  d.rank_ = n;
  d.name_ = "GL" + std::to_string(n);
  if (n >= 2) d.cartan_ = cartan_of('A', n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Root r;
    r.character.assign(n, 0);
    r.character[i] = 1;
    r.character[i + 1] = -1;
    r.coroot = r.character;
    r.coeffs.assign(n - 1, 0);
    r.coeffs[i] = 1;
    r.positive = true;
    d.roots_.push_back(std::move(r));
    d.simple_.push_back(i);
  }
  d.generate_roots();
  d.validate();
  return d;
}

RootDatum RootDatum::named(char type, std::size_t n, std::size_t central_rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (type == 'A' && central_rank == 1) return general_linear(n + 1);
  std::string name = type_name(type, n);
  if (central_rank > 0) name += "+z" + std::to_string(central_rank);
  return from_cartan(cartan_of(type, n), central_rank, name);
}

RootDatum RootDatum::from_json(const nlohmann::json& spec) {
  if (!spec.is_object()) throw InputError("root datum spec must be a JSON object");
  std::size_t central = 0;
  if (spec.contains("central_rank")) {
    const auto& c = spec["central_rank"];
    if (!c.is_number_integer() || c.get<std::int64_t>() < 0)
      throw InputError("central_rank must be a non-negative integer");
    central = c.get<std::size_t>();
  }
  if (spec.contains("cartan")) {
    const auto& rows = spec["cartan"];
    if (!rows.is_array()) throw InputError("cartan must be an array of rows");
    std::vector<IntVec> a;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array()) throw InputError("cartan row " + std::to_string(i) + " is not an array");
      IntVec row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const auto& e = rows[i][j];
        if (!e.is_number_integer())
          throw InputError("invalid Cartan matrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + e.dump() + " is not an integer");
        row.push_back(e.get<std::int64_t>());
      }
      a.push_back(std::move(row));
    }
    return from_cartan(a, central, spec.value("name", std::string{}));
  }
  if (spec.contains("type")) {
    if (!spec["type"].is_string()) throw InputError("root datum type must be a string such as \"A\"");
    const auto t = spec["type"].get<std::string>();
    if (!spec.contains("n") || !spec["n"].is_number_integer()) throw InputError("named root datum needs integer n");
    const auto n = spec["n"].get<std::size_t>();
    if (t == "GL" || t == "gl") return general_linear(n);
    if (t.size() != 1) throw InputError("unknown root system type '" + t + "'");
    return named(t[0], n, central);
  }
  throw InputError("root datum spec needs either \"cartan\" or \"type\"");
}

RootDatum RootDatum::parse(std::string_view spec) {
  std::string s(spec);
  if (!s.empty() && s.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("parse error in inline root datum: ") + e.what());
    }
    return from_json(j);
  }
  static const std::regex gl(R"((gl|GL)(\d+))");
  static const std::regex simple(R"(([a-gA-G])(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, gl)) return general_linear(std::stoul(m[2]));
  // Products such as a1xa1 build a block-diagonal Cartan matrix.
  if (s.find('x') != std::string::npos || std::regex_match(s, simple)) {
    std::vector<IntVec> blocks;
    std::vector<std::vector<IntVec>> parts;
    std::stringstream ss(s);
    std::string part;
    bool all_named = true;
    while (std::getline(ss, part, 'x')) {
      if (!std::regex_match(part, m, simple)) {
        all_named = false;
        break;
      }
      parts.push_back(cartan_of(static_cast<char>(std::toupper(m[1].str()[0])), std::stoul(m[2])));
    }
    if (all_named && !parts.empty()) {
      if (parts.size() == 1) {
        std::regex_match(s, m, simple);
        return named(m[1].str()[0], std::stoul(m[2]));
      }
      std::size_t total = 0;
      for (auto& p : parts) total += p.size();
      std::vector<IntVec> a(total, IntVec(total, 0));
      std::size_t off = 0;
      for (auto& p : parts) {
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = 0; j < p.size(); ++j) a[off + i][off + j] = p[i][j];
        off += p.size();
      }
      std::string name = s;
      std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
        return c == 'x' ? 'x' : static_cast<char>(std::toupper(c));
      });
      return from_cartan(a, 0, name);
    }
  }
  std::ifstream in(s);
  if (!in) throw InputError("unknown root datum '" + s + "' (not a builtin name, JSON, or readable file)");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("parse error in root datum file '" + s + "': " + e.what());
  }
  return from_json(j);
}

void RootDatum::generate_roots() {
  const std::size_t ss = simple_.size();
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].character, i);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < roots_.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < ss; ++s) {
      const Root& a = roots_[simple_[s]];
      const Root& b = roots_[cur];
      const std::int64_t k = dot(b.character, a.coroot);
      const std::int64_t kv = dot(a.character, b.coroot);
      Root img;
      img.character = sub(b.character, scale(k, a.character));
      img.coroot = sub(b.coroot, scale(kv, a.coroot));
      img.coeffs = b.coeffs;
      img.coeffs[s] -= k;
      if (index_.contains(img.character)) continue;
      if (roots_.size() >= kRootCap)
        throw InputError("root enumeration exceeded " + std::to_string(kRootCap) +
                         " roots: Cartan matrix is not of finite type");
      const bool all_nonneg = std::all_of(img.coeffs.begin(), img.coeffs.end(), [](auto c) { return c >= 0; });
      const bool all_nonpos = std::all_of(img.coeffs.begin(), img.coeffs.end(), [](auto c) { return c <= 0; });
      if (!all_nonneg && !all_nonpos)
        throw InputError("root " + to_string(img.coeffs) + " has mixed-sign simple-root coefficients");
      img.positive = all_nonneg;
      index_.emplace(img.character, roots_.size());
      roots_.push_back(std::move(img));
      queue.push_back(roots_.size() - 1);
    }
  }
  negative_.resize(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) negative_[i] = index_.at(negate(roots_[i].character));
}

void RootDatum::validate() const {
  for (const auto& r : roots_) {
    if (dot(r.character, r.coroot) != 2)
      throw InternalError("<a, a^vee> != 2 for root " + to_string(r.character));
  }
  for (std::size_t s = 0; s < simple_.size(); ++s)
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      const Root& a = roots_[simple_[s]];
      const auto img = sub(roots_[i].character, scale(dot(roots_[i].character, a.coroot), a.character));
      if (!index_.contains(img)) throw InternalError("root set not closed under simple reflections");
    }
}

std::optional<std::size_t> RootDatum::find_root(std::span<const std::int64_t> character) const {
  auto it = index_.find(IntVec(character.begin(), character.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootDatum::negative_of(std::size_t root_index) const { return negative_[root_index]; }

std::vector<std::size_t> RootDatum::positive_roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].positive) out.push_back(i);
  return out;
}

Coweight RootDatum::reflect(std::size_t root_index, std::span<const std::int64_t> coweight) const {
  const Root& a = roots_[root_index];
  return sub(coweight, scale(dot(a.character, coweight), a.coroot));
}

IntMatrix RootDatum::simple_reflection(std::size_t i) const {
  const Root& a = roots_[simple_[i]];
  IntMatrix m = IntMatrix::identity(rank_);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) m(r, c) -= a.coroot[r] * a.character[c];
  return m;
}

bool RootDatum::is_dominant(std::span<const std::int64_t> coweight) const {
  for (auto s : simple_)
    if (dot(roots_[s].character, coweight) < 0) return false;
  return true;
}

std::vector<std::size_t> RootDatum::parabolic_roots(std::span<const std::size_t> theta) const {
  std::vector<bool> allowed(simple_.size(), false);
  for (auto t : theta) allowed.at(t) = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    bool inside = true;
    for (std::size_t s = 0; s < simple_.size(); ++s)
      if (roots_[i].coeffs[s] != 0 && !allowed[s]) inside = false;
    if (inside) out.push_back(i);
  }
  return out;
}

nlohmann::json RootDatum::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["rank"] = rank_;
  j["semisimple_rank"] = semisimple_rank();
  j["central_rank"] = central_rank();
  j["realization"] = general_linear_ ? "GL_n standard basis" : "adjoint + central";
  j["cartan"] = cartan_;
  j["simple_roots"] = simple_;
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : roots_)
    roots.push_back({{"character", r.character}, {"coroot", r.coroot}, {"coeffs", r.coeffs}, {"positive", r.positive}});
  j["roots"] = roots;
  return j;
}

}  // namespace hck
