#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hck/int_matrix.hpp"

namespace hck {

/// Integer coordinates in the fixed basis of the cocharacter lattice X_*(T).
using Coweight = IntVec;

struct Root {
  IntVec character;  // in X^*(T)
  IntVec coroot;     // in X_*(T)
  IntVec coeffs;     // coordinates in the simple roots
  bool positive = false;
};

/// A split reductive root datum of finite type.
///
/// Two lattice realizations are supported. GL_n uses the standard basis
/// e_1..e_n of both lattices. Every other datum is the adjoint realization of
/// its Cartan matrix (X^* spanned by the simple roots, X_* by the fundamental
/// coweights) plus a free central summand on which the Weyl group acts
/// trivially.
///
/// Cartan convention: cartan[i][j] = <alpha_j, alpha_i^vee>.
class RootDatum {
 public:
  static RootDatum from_cartan(const std::vector<IntVec>& cartan, std::size_t central_rank,
                               std::string name = {});
  static RootDatum general_linear(std::size_t n);
  /// Types A_n, B_n, C_n, D_n, G_2, F_4.
  static RootDatum named(char type, std::size_t n, std::size_t central_rank = 0);
  /// {"type": "A", "n": 2, "central_rank": 1} or {"cartan": [[2,-1],[-1,2]], "central_rank": 0}.
  /// Type A_{n} with central_rank 1 is realized as GL_{n+1}.
  static RootDatum from_json(const nlohmann::json& spec);
  /// Accepts a builtin name (a2, b2, g2, gl3, a1xa1, ...), inline JSON, or a JSON file path.
  static RootDatum parse(std::string_view spec);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_.size(); }
  std::size_t central_rank() const { return rank_ - semisimple_rank(); }
  bool is_general_linear() const { return general_linear_; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_[i]; }
  /// Indices into roots() of the simple roots, in Dynkin order.
  const std::vector<std::size_t>& simple_roots() const { return simple_; }
  const std::vector<IntVec>& cartan() const { return cartan_; }

  std::optional<std::size_t> find_root(std::span<const std::int64_t> character) const;
  std::size_t negative_of(std::size_t root_index) const;
  std::vector<std::size_t> positive_roots() const;

  std::int64_t pairing(std::span<const std::int64_t> character,
                       std::span<const std::int64_t> cocharacter) const {
    return dot(character, cocharacter);
  }

  /// s_a(lambda) = lambda - <a, lambda> a^vee.
  Coweight reflect(std::size_t root_index, std::span<const std::int64_t> coweight) const;
  /// Matrix of the simple reflection s_i on X_*(T).
  IntMatrix simple_reflection(std::size_t i) const;

  bool is_dominant(std::span<const std::int64_t> coweight) const;
  /// Roots in the Q-span of the given simple roots (indices into simple_roots()).
  std::vector<std::size_t> parabolic_roots(std::span<const std::size_t> theta) const;

  nlohmann::json to_json() const;

 private:
  void generate_roots();
  void validate() const;

  std::string name_;
  std::size_t rank_ = 0;
  bool general_linear_ = false;
  std::vector<IntVec> cartan_;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> index_;
  std::vector<std::size_t> negative_;
};

}  // namespace hck
