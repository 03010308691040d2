#include "hck/padic_groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hck/error.hpp"
#include "hck/parallel.hpp"

namespace hck {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kForcedZero || b >= kForcedZero) return kForcedZero;
  return a + b;
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

ValuationGroupScheme::ValuationGroupScheme(IntMatrix bounds) : bounds_(std::move(bounds)) {
  const std::size_t n = bounds_.rows();
  if (n == 0 || bounds_.cols() != n) throw InputError("bounds matrix must be square and nonempty");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (bounds_(i, j) < 0) throw InputError("negative bound at entry " + entry_name(i, j));
      if (bounds_(i, j) > kForcedZero) bounds_(i, j) = kForcedZero;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (bounds_(i, k) > sat_add(bounds_(i, j), bounds_(j, k)))
          throw InputError("bounds are not closed under multiplication: m" + entry_name(i, k) + " = " +
                           std::to_string(bounds_(i, k)) + " exceeds m" + entry_name(i, j) + " + m" +
                           entry_name(j, k) + " for (i,j,k) = (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
}

ValuationGroupScheme ValuationGroupScheme::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("bounds matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return ValuationGroupScheme(std::move(m));
}

std::int64_t ValuationGroupScheme::max_bound() const {
  std::int64_t m = 1;
  for (auto v : bounds_.data())
    if (v < kForcedZero) m = std::max(m, v);
  return m;
}

bool ValuationGroupScheme::contains(const ValuationGroupScheme& other) const {
  if (other.n() != n()) return false;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      if (other.bound(i, j) < bound(i, j)) return false;
  return true;
}

nlohmann::json ValuationGroupScheme::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n(); ++j) {
      if (forced_zero(i, j))
        row.push_back(i == j ? "1" : "0");
      else
        row.push_back(bound(i, j));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string ValuationGroupScheme::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < n(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n(); ++j) {
      if (j) out << ", ";
      if (forced_zero(i, j))
        out << (i == j ? "1" : "0");
      else if (i == j)
        out << (bound(i, i) == 0 ? "O^x" : "1+p^" + std::to_string(bound(i, i)));
      else
        out << "p^" << bound(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

ValuationGroupScheme from_filtration(const RootDatum& datum, const FiltrationProfile& profile) {
  if (!datum.is_general_linear()) throw InputError("from_filtration needs a GL_n datum, got " + datum.name());
  return ValuationGroupScheme(profile.gl_bounds(datum));
}

ValuationGroupScheme conjugate_by_permutation(const ValuationGroupScheme& k, const std::vector<std::size_t>& sigma) {
  const std::size_t n = k.n();
  std::vector<std::size_t> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted.size() != n || sorted[i] != i) throw InputError("not a permutation of 0.." + std::to_string(n - 1));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = k.bound(sigma[i], sigma[j]);
  return ValuationGroupScheme(std::move(m));
}

namespace {

std::vector<std::size_t> block_of(const Partition& blocks, std::size_t n) {
  std::size_t total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
  if (total != n) throw InputError("partition sizes sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] == 0) throw InputError("empty block in partition");
    out.insert(out.end(), blocks[b], b);
  }
  return out;
}

}  // namespace

ValuationGroupScheme intersect_levi(const ValuationGroupScheme& k, const Partition& blocks) {
  const auto blk = block_of(blocks, k.n());
  IntMatrix m = k.bounds();
  for (std::size_t i = 0; i < k.n(); ++i)
    for (std::size_t j = 0; j < k.n(); ++j)
      if (blk[i] != blk[j]) m(i, j) = kForcedZero;
  return ValuationGroupScheme(std::move(m));
}

ValuationGroupScheme levi_block(const ValuationGroupScheme& k, const Partition& blocks, std::size_t block) {
  const auto blk = block_of(blocks, k.n());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < k.n(); ++i)
    if (blk[i] == block) idx.push_back(i);
  if (idx.empty()) throw InputError("no such block");
  IntMatrix m(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = k.bound(idx[a], idx[b]);
  return ValuationGroupScheme(std::move(m));
}

ValuationGroupScheme lower_part(const ValuationGroupScheme& k, const Partition& blocks) {
  const auto blk = block_of(blocks, k.n());
  IntMatrix m(k.n(), k.n());
  for (std::size_t i = 0; i < k.n(); ++i)
    for (std::size_t j = 0; j < k.n(); ++j) m(i, j) = blk[i] > blk[j] ? k.bound(i, j) : kForcedZero;
  return ValuationGroupScheme(std::move(m));
}

ValuationGroupScheme upper_part(const ValuationGroupScheme& k, const Partition& blocks) {
  const auto blk = block_of(blocks, k.n());
  IntMatrix m(k.n(), k.n());
  for (std::size_t i = 0; i < k.n(); ++i)
    for (std::size_t j = 0; j < k.n(); ++j) m(i, j) = blk[i] < blk[j] ? k.bound(i, j) : kForcedZero;
  return ValuationGroupScheme(std::move(m));
}

QPoly gl_order(std::size_t b) {
  QPoly out(1);
  const QPoly qb = QPoly::q().pow(b);
  for (std::size_t i = 0; i < b; ++i) out = out * (qb - QPoly::q().pow(i));
  return out;
}

QPoly point_count(const ValuationGroupScheme& k, std::int64_t level) {
  if (level < k.max_bound())
    throw InputError("level " + std::to_string(level) + " is below the largest bound " + std::to_string(k.max_bound()));
  const std::size_t n = k.n();
  // Lifts above the residue field.
  std::int64_t exponent = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!k.forced_zero(i, j)) exponent += level - std::max<std::int64_t>(k.bound(i, j), 1);
  // Residue pattern: i <= j when m_ij = 0. Closure makes this a preorder, so the
  // reduction is block triangular with GL_b blocks on the classes.
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    cls[i] = sizes.size();
    std::size_t size = 1;
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] == n && k.bound(i, j) == 0 && k.bound(j, i) == 0) {
        cls[j] = sizes.size();
        ++size;
      }
    sizes.push_back(size);
  }
  QPoly residue(1);
  std::vector<bool> seen(sizes.size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = cls[i];
    if (seen[c]) continue;
    seen[c] = true;
    if (sizes[c] > 1)
      residue = residue * gl_order(sizes[c]);
    else if (k.bound(i, i) == 0)
      residue = residue * (QPoly::q() - QPoly(1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cls[i] != cls[j] && k.bound(i, j) == 0) residue = residue * QPoly::q();
  return residue * QPoly::q().pow(static_cast<std::size_t>(exponent));
}

QPoly group_index(const ValuationGroupScheme& a, const ValuationGroupScheme& b) {
  if (!a.contains(b)) throw InputError("index requested for a group that is not a subgroup: " + b.to_string() +
                                       " is not inside " + a.to_string());
  const std::int64_t level = std::max(a.max_bound(), b.max_bound());
  const QPoly idx = point_count(a, level).divide_exact(point_count(b, level));
  const QPoly next = point_count(a, level + 1).divide_exact(point_count(b, level + 1));
  if (!(idx == next)) throw InternalError("index depends on the level: " + idx.to_string() + " vs " + next.to_string());
  return idx;
}

std::optional<std::int64_t> VolumeExponent::logq() const {
  for (std::int64_t e = 0; e <= numerator.degree() + denominator.degree() + 1; ++e) {
    const QPoly qe = QPoly::q().pow(static_cast<std::size_t>(e));
    if (numerator == denominator * qe) return e;
    if (denominator == numerator * qe) return -e;
  }
  return std::nullopt;
}

std::string VolumeExponent::to_string() const {
  if (denominator == QPoly(1)) return numerator.to_string();
  return numerator.to_string() + " / " + denominator.to_string();
}

VolumeExponent log_volume(const ValuationGroupScheme& k, const ValuationGroupScheme& reference) {
  if (k.n() != reference.n()) throw InputError("volume comparison needs groups of the same size");
  if (reference.contains(k)) return {QPoly(1), group_index(reference, k)};
  if (k.contains(reference)) return {group_index(k, reference), QPoly(1)};
  const std::int64_t level = std::max(k.max_bound(), reference.max_bound());
  VolumeExponent at{point_count(k, level), point_count(reference, level)};
  VolumeExponent next{point_count(k, level + 1), point_count(reference, level + 1)};
  if (!(at == next)) throw InternalError("volume ratio depends on the level");
  return at;
}

std::string to_string(ConjugacyVerdict v) {
  return v == ConjugacyVerdict::DistinctVolume ? "DISTINCT_VOLUME" : "INCONCLUSIVE";
}

ConjugacyVerdict conjugacy_obstruction(const ValuationGroupScheme& a, const ValuationGroupScheme& b) {
  if (a.n() != b.n()) throw InputError("conjugacy needs groups of the same size");
  const VolumeExponent v = log_volume(a, b);
  return v.numerator == v.denominator ? ConjugacyVerdict::Inconclusive : ConjugacyVerdict::DistinctVolume;
}

// ---- residue rings ------------------------------------------------------------

namespace {

std::int64_t ipow(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= p;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    const std::int64_t t = g / a1;
    std::tie(g, a1) = std::make_tuple(a1, g - t * a1);
    std::tie(x, x1) = std::make_tuple(x1, x - t * x1);
  }
  if (g != 1) throw InternalError("not a unit modulo " + std::to_string(m));
  return mod(x, m);
}

bool det_unit_mod_p(const ResidueMatrix& g, std::size_t n, std::int64_t p) {
  std::vector<std::int64_t> a(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a[i] = mod(g[i], p);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (a[r * n + c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return false;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
    const std::int64_t inv = inverse_mod(a[c * n + c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = a[r * n + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[r * n + j] = mod(a[r * n + j] - f * a[c * n + j], p);
    }
  }
  return true;
}

bool entry_ok(const ValuationGroupScheme& k, std::size_t i, std::size_t j, std::int64_t v, std::int64_t p,
              std::int64_t level) {
  const std::int64_t modulus = ipow(p, level);
  const std::int64_t m = k.bound(i, j);
  if (k.forced_zero(i, j)) return mod(v - (i == j ? 1 : 0), modulus) == 0;
  const std::int64_t step = ipow(p, std::min(m, level));
  if (i == j) return m == 0 || mod(v - 1, step) == 0;
  return mod(v, step) == 0;
}

// Residues allowed at entry (i,j) modulo p^N, before the determinant condition.
std::vector<std::int64_t> allowed_values(const ValuationGroupScheme& k, std::size_t i, std::size_t j, std::int64_t p,
                                         std::int64_t level) {
  const std::int64_t modulus = ipow(p, level);
  std::vector<std::int64_t> out;
  if (k.forced_zero(i, j)) return {i == j ? 1 : 0};
  const std::int64_t step = ipow(p, std::min(k.bound(i, j), level));
  const std::int64_t base = (i == j && k.bound(i, j) > 0) ? 1 : 0;
  for (std::int64_t v = 0; v < modulus; v += step) out.push_back(mod(base + v, modulus));
  return out;
}

ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b, std::size_t n, std::int64_t modulus) {
  ResidueMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const std::int64_t x = a[i * n + l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + x * b[l * n + j]) % modulus;
    }
  return c;
}

// Inverse over Z/p^N by Gauss-Jordan with unit pivots; nullopt if not invertible.
std::optional<ResidueMatrix> invert(const ResidueMatrix& g, std::size_t n, std::int64_t p, std::int64_t modulus) {
  ResidueMatrix a = g;
  ResidueMatrix inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (a[r * n + c] % p != 0) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[c * n + j], a[piv * n + j]);
      std::swap(inv[c * n + j], inv[piv * n + j]);
    }
    const std::int64_t u = inverse_mod(a[c * n + c], modulus);
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] = a[c * n + j] * u % modulus;
      inv[c * n + j] = inv[c * n + j] * u % modulus;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const std::int64_t f = a[r * n + c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = mod(a[r * n + j] - f * a[c * n + j], modulus);
        inv[r * n + j] = mod(inv[r * n + j] - f * inv[c * n + j], modulus);
      }
    }
  }
  return inv;
}

// Enumerates K mod p^N (entrywise-allowed residues with unit determinant),
// sharded on the first entry's values. Calls visit(shard, g).
template <class Visit>
void for_each_element(const ValuationGroupScheme& k, std::int64_t p, std::int64_t level, std::uint64_t cap,
                      std::size_t jobs, std::size_t& shards, Visit&& visit) {
  const std::size_t n = k.n();
  std::vector<std::vector<std::int64_t>> allowed;
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      allowed.push_back(allowed_values(k, i, j, p, level));
      total *= static_cast<long double>(allowed.back().size());
    }
  if (total > static_cast<long double>(cap))
    throw CapExceeded("enumeration of " + std::to_string(static_cast<unsigned long long>(total)) +
                      " residue matrices exceeds the cap of " + std::to_string(cap));
  shards = allowed[0].size();
  parallel_for(shards, jobs, [&](std::size_t shard) {
    ResidueMatrix g(n * n);
    std::vector<std::size_t> idx(n * n, 0);
    g[0] = allowed[0][shard];
    for (std::size_t e = 1; e < n * n; ++e) g[e] = allowed[e][0];
    while (true) {
      if (det_unit_mod_p(g, n, p)) visit(shard, g);
      std::size_t e = 1;
      while (e < n * n && idx[e] + 1 == allowed[e].size()) {
        idx[e] = 0;
        g[e] = allowed[e][0];
        ++e;
      }
      if (e == n * n) break;
      g[e] = allowed[e][++idx[e]];
    }
  });
}

}  // namespace

bool contains_residue(const ValuationGroupScheme& k, const ResidueMatrix& g, std::int64_t p, std::int64_t level) {
  const std::size_t n = k.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!entry_ok(k, i, j, g[i * n + j], p, level)) return false;
  return det_unit_mod_p(g, n, p);
}

std::uint64_t brute_force_count_full(const ValuationGroupScheme& k, std::int64_t p, std::int64_t level,
                                     std::uint64_t cap) {
  const std::size_t n = k.n();
  const std::int64_t modulus = ipow(p, level);
  long double total = 1;
  for (std::size_t e = 0; e < n * n; ++e) total *= static_cast<long double>(modulus);
  if (total > static_cast<long double>(cap)) throw CapExceeded("full scan of M_n(Z/p^N) exceeds the cap");
  ResidueMatrix g(n * n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (contains_residue(k, g, p, level)) ++count;
    std::size_t e = 0;
    while (e < n * n && g[e] + 1 == modulus) g[e++] = 0;
    if (e == n * n) break;
    ++g[e];
  }
  return count;
}

std::uint64_t brute_force_count(const ValuationGroupScheme& k, std::int64_t p, std::int64_t level,
                                std::uint64_t cap) {
  std::size_t shards = 0;
  std::vector<std::uint64_t> counts(ipow(p, level) + 1, 0);
  for_each_element(k, p, level, cap, 1, shards, [&](std::size_t shard, const ResidueMatrix&) { ++counts[shard]; });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

// Block LDU of g over Z/p^N: g = L D U with L block-lower unipotent, D block
// diagonal and U block-upper unipotent. nullopt when a pivot block is singular.
struct Ldu {
  ResidueMatrix l, d, u;
};

std::optional<Ldu> block_ldu(const ResidueMatrix& g, std::size_t n, const Partition& blocks, std::int64_t p, std::int64_t modulus) {
  ResidueMatrix a = g;
  Ldu out{ResidueMatrix(n * n, 0), ResidueMatrix(n * n, 0), ResidueMatrix(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) out.l[i * n + i] = out.u[i * n + i] = 1;
  std::size_t start = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t sz = blocks[b];
    ResidueMatrix piv(sz * sz);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        piv[i * sz + j] = a[(start + i) * n + start + j];
        out.d[(start + i) * n + start + j] = piv[i * sz + j];
      }
    auto pinv = invert(piv, sz, p, modulus);
    if (!pinv) return std::nullopt;
    const std::size_t rest = start + sz;
    // L[r, block] = A[r, block] P^{-1};  U[block, c] = P^{-1} A[block, c].
    for (std::size_t r = rest; r < n; ++r)
      for (std::size_t j = 0; j < sz; ++j) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < sz; ++t) s = (s + a[r * n + start + t] * (*pinv)[t * sz + j]) % modulus;
        out.l[r * n + start + j] = s;
      }
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t c = rest; c < n; ++c) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < sz; ++t) s = (s + (*pinv)[i * sz + t] * a[(start + t) * n + c]) % modulus;
        out.u[(start + i) * n + c] = s;
      }
    // Schur complement.
    for (std::size_t r = rest; r < n; ++r)
      for (std::size_t c = rest; c < n; ++c) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < sz; ++t) s = (s + out.l[r * n + start + t] * a[(start + t) * n + c]) % modulus;
        a[r * n + c] = mod(a[r * n + c] - s, modulus);
      }
    start = rest;
  }
  return out;
}

}  // namespace

FactorizationReport iwahori_factorization_check(const ValuationGroupScheme& k_in, const Partition& blocks_in,
                                                SignConvention sign, std::int64_t p, std::uint64_t cap,
                                                std::size_t jobs) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw InputError("brute force supports p in {2,3,5,7}");
  ValuationGroupScheme k = k_in;
  Partition blocks = blocks_in;
  if (sign == SignConvention::UpperOpposite) {
    // Reversing the basis swaps upper and lower; the block order reverses too.
    std::vector<std::size_t> rev(k.n());
    for (std::size_t i = 0; i < k.n(); ++i) rev[i] = k.n() - 1 - i;
    k = conjugate_by_permutation(k, rev);
    std::reverse(blocks.begin(), blocks.end());
  }
  const ValuationGroupScheme lower = lower_part(k, blocks), levi = intersect_levi(k, blocks), upper = upper_part(k, blocks);

  FactorizationReport rep;
  rep.p = p;
  const std::int64_t top = k.max_bound();
  rep.analytic = point_count(k, top) == point_count(lower, top) * point_count(levi, top) * point_count(upper, top) &&
                 point_count(k, top + 1) ==
                     point_count(lower, top + 1) * point_count(levi, top + 1) * point_count(upper, top + 1);

  for (std::int64_t level : {top + 1, top}) {
    try {
      const std::int64_t modulus = ipow(p, level);
      std::size_t shards = 0;
      std::vector<std::uint64_t> seen(static_cast<std::size_t>(modulus) + 1, 0);
      std::vector<char> bad(static_cast<std::size_t>(modulus) + 1, 0);
      for_each_element(k, p, level, cap, jobs, shards, [&](std::size_t shard, const ResidueMatrix& g) {
        ++seen[shard];
        if (bad[shard]) return;
        auto f = block_ldu(g, k.n(), blocks, p, modulus);
        if (!f || !contains_residue(lower, f->l, p, level) || !contains_residue(levi, f->d, p, level) ||
            !contains_residue(upper, f->u, p, level) || multiply(multiply(f->l, f->d, k.n(), modulus), f->u, k.n(), modulus) != g)
          bad[shard] = 1;
      });
      rep.level = level;
      rep.elements = std::accumulate(seen.begin(), seen.end(), std::uint64_t{0});
      rep.exhaustive = std::none_of(bad.begin(), bad.end(), [](char c) { return c != 0; });
      if (rep.elements != point_count(k, level).evaluate(p).get_ui())
        throw InternalError("enumerated " + std::to_string(rep.elements) + " elements but the analytic count is " +
                            point_count(k, level).evaluate(p).get_str());
      break;
    } catch (const CapExceeded&) {
      continue;
    }
  }
  if (!rep.exhaustive)
    rep.status = rep.analytic ? "UNVERIFIED_EXHAUSTIVELY" : "FAIL";
  else
    rep.status = (rep.analytic && *rep.exhaustive) ? "PASS" : "FAIL";
  return rep;
}

ConjugatorSearch conjugator_search(const ValuationGroupScheme& a, const ValuationGroupScheme& b, std::int64_t p,
                                   std::int64_t level, std::uint64_t cap) {
  if (a.n() != b.n()) throw InputError("conjugator search needs groups of the same size");
  const std::size_t n = a.n();
  const std::int64_t modulus = ipow(p, level);
  ConjugatorSearch out;
  std::vector<ResidueMatrix> elements;
  std::size_t shards = 0;
  for_each_element(a, p, level, cap, 1, shards, [&](std::size_t, const ResidueMatrix& g) { elements.push_back(g); });
  if (point_count(a, level).evaluate(p) != point_count(b, level).evaluate(p)) {
    out.exhausted = true;
    return out;
  }
  ResidueMatrix g(n * n, 0);
  while (true) {
    if (out.tried >= cap) return out;
    if (auto ginv = invert(g, n, p, modulus)) {
      ++out.tried;
      bool ok = true;
      for (const auto& x : elements)
        if (!contains_residue(b, multiply(multiply(g, x, n, modulus), *ginv, n, modulus), p, level)) {
          ok = false;
          break;
        }
      if (ok) {
        out.conjugator = g;
        out.exhausted = true;
        return out;
      }
    }
    std::size_t e = 0;
    while (e < n * n && g[e] + 1 == modulus) g[e++] = 0;
    if (e == n * n) break;
    ++g[e];
  }
  out.exhausted = true;
  return out;
}

}  // namespace hck
