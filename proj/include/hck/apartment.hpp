#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hck/rational.hpp"
#include "hck/root_datum.hpp"
#include "hck/weyl.hpp"

namespace hck {

/// A point of the apartment, stored as its offset x - x0 from the special
/// base point x0 in the coordinates of X_*(T) (x) Q.
struct ApartmentPoint {
  std::vector<Rational> offset;

  /// "1/2,0,0"; the number of coordinates must equal the datum's rank.
  static ApartmentPoint parse(const RootDatum& datum, std::string_view text);
  static ApartmentPoint origin(const RootDatum& datum);
  bool operator==(const ApartmentPoint&) const = default;
};

std::string to_string(const ApartmentPoint& x);

/// a(x - x0) for a character a.
Rational evaluate(std::span<const std::int64_t> character, const ApartmentPoint& x);

/// w . x through the coweight action.
ApartmentPoint act(const WeylElement& w, const ApartmentPoint& x);

/// Affine roots a + k have level k in Z (split groups, e_a = 1).
struct AffineRoot {
  std::size_t gradient;
  std::int64_t level;
  Rational evaluate(const RootDatum& datum, const ApartmentPoint& x) const;
};

/// min{k in Z : a(x - x0) + k >= r} = ceil(r - a(x - x0)).
std::int64_t threshold(const RootDatum& datum, std::size_t root, const ApartmentPoint& x, const Rational& r);

enum class PointKind { Special, AlcoveInterior, Facet };

struct PointClass {
  PointKind kind;
  std::size_t dimension;  // of the minimal facet in the reduced apartment
  std::string label() const;
};

PointClass classify_point(const RootDatum& datum, const ApartmentPoint& x);

/// 0 <= a(x - x0) <= 1 for every positive root a (the closure of the base alcove).
bool in_base_alcove_closure(const RootDatum& datum, const ApartmentPoint& x);

struct FiltrationProfile {
  Rational depth;
  std::vector<std::int64_t> thresholds;  // indexed like datum.roots()

  std::int64_t diagonal_bound() const { return ceil_to_int(depth); }
  /// For GL_n: entry (i,j) is the threshold of e_i - e_j, the diagonal is ceil(r).
  IntMatrix gl_bounds(const RootDatum& datum) const;
};

FiltrationProfile filtration_profile(const RootDatum& datum, const ApartmentPoint& x, const Rational& r);

using Theta = std::vector<std::size_t>;  // indices into simple_roots()

/// All subsets of the simple roots, ordered by bitmask.
std::vector<Theta> all_thetas(const RootDatum& datum);

enum class HeartStatus { ProvenCondition1, Mismatch };

struct HeartWitness {
  Theta theta;
  std::size_t w2;  // index in the Weyl group
  std::size_t root;
  std::int64_t at_x;
  std::int64_t at_w2x;
};

struct HeartVerdict {
  HeartStatus status = HeartStatus::ProvenCondition1;
  std::vector<HeartWitness> witnesses;
};

/// Compares the thresholds of every a in Phi_theta at x and at w2 . x, where
/// w = w1 w2 runs over all of W_0. A mismatch is not by itself a proof that
/// the Levi intersections fail to be conjugate.
HeartVerdict heart_condition1_check(const WeylGroup& group, const ApartmentPoint& x, const Rational& r,
                                    const Theta& theta);

/// (w2^{-1} a - a)(x - x0) = a(w2 . x - x).
Rational key_quantity(const WeylGroup& group, std::size_t w2, std::size_t root, const ApartmentPoint& x);

struct KeyInequalityFailure {
  Theta theta;
  std::size_t w2;
  std::size_t root;
  Rational value;
};

/// Every (w2, a in Phi_theta^+) violating 0 <= (w2^{-1} a - a)(x - x0) < 1.
std::vector<KeyInequalityFailure> key_inequality_failures(const WeylGroup& group, const ApartmentPoint& x,
                                                          const Theta& theta);

struct PointReport {
  ApartmentPoint x;
  PointClass point_class;
  std::vector<std::pair<Theta, HeartVerdict>> verdicts;
};

std::vector<PointReport> heart_scan(const WeylGroup& group, const Rational& r,
                                    const std::vector<ApartmentPoint>& grid, std::size_t jobs = 1);

/// Points of the closed base alcove whose coordinates have denominator at most
/// max_denominator. For GL_n the last coordinate is 0; for other data the
/// central coordinates are 0.
std::vector<ApartmentPoint> base_alcove_grid(const RootDatum& datum, int max_denominator);

std::vector<ApartmentPoint> alcove_interior_grid(const RootDatum& datum, int max_denominator);

nlohmann::json to_json(const RootDatum& datum, const WeylGroup& group, const HeartVerdict& verdict);
nlohmann::json to_json(const RootDatum& datum, const WeylGroup& group, const PointReport& report);

}  // namespace hck
