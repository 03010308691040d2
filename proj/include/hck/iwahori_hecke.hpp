#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hck/laurent.hpp"
#include "hck/weyl.hpp"

namespace hck {

/// Bernstein basis label theta_lambda * T_w.
using HeckeLabel = std::pair<Coweight, std::size_t>;

template <class Scalar>
using BasicHeckeElement = std::map<HeckeLabel, Scalar>;

/// Iwahori-Hecke algebra of a root datum in its Bernstein presentation:
///   T_s^2 = (q-1) T_s + q,   braid relations,   theta_lambda theta_mu = theta_{lambda+mu},
///   T_s theta_lambda - theta_{s lambda} T_s = (q-1) (theta_lambda - theta_{s lambda}) / (1 - theta_{-alpha^vee}).
/// Scalar is LaurentScalar (q = v^2 formal) or Rational (q specialized).
template <class Scalar>
class HeckeAlgebra {
 public:
  using Element = BasicHeckeElement<Scalar>;

  HeckeAlgebra(const WeylGroup& group, Scalar q);

  const WeylGroup& group() const { return *group_; }
  const Scalar& q() const { return q_; }

  Element one() const;
  Element t(std::size_t w) const;
  Element t_simple(std::size_t i) const { return t(group_->times_simple(0, i)); }
  Element theta(const Coweight& lambda) const;

  Element multiply(const Element& x, const Element& y) const;
  Element commutator(const Element& x, const Element& y) const;
  /// Commutes with every T_{s_i} and every theta_{e_j}.
  bool is_central(const Element& z) const;

  /// T_{s_i} theta_lambda in normal form.
  Element simple_times_theta(std::size_t i, const Coweight& lambda) const;

 private:
  Element left_simple(std::size_t i, const Element& x) const;
  Element right_simple(const Element& x, std::size_t i) const;

  const WeylGroup* group_;
  Scalar q_;
  Scalar q_minus_1_;
};

using HeckeElement = BasicHeckeElement<LaurentScalar>;

template <class Scalar>
BasicHeckeElement<Scalar> operator+(const BasicHeckeElement<Scalar>& a, const BasicHeckeElement<Scalar>& b);
template <class Scalar>
BasicHeckeElement<Scalar> operator-(const BasicHeckeElement<Scalar>& a, const BasicHeckeElement<Scalar>& b);
template <class Scalar>
BasicHeckeElement<Scalar> scale(const BasicHeckeElement<Scalar>& a, const Scalar& c);

/// Coefficientwise v -> v0.
BasicHeckeElement<Rational> specialize(const HeckeElement& x, const Rational& v0);

/// theta written through a difference of dominant coweights,
/// theta_{lambda1} * theta_{lambda2}^{-1}.
HeckeElement theta_from_dominant(const HeckeAlgebra<LaurentScalar>& h, const Coweight& lambda1,
                                 const Coweight& lambda2);

struct CentralElement {
  Coweight mu;  // dominant
  bool normalized = false;  // the input was not dominant and was replaced
  HeckeElement element;     // sum of theta over the W_0-orbit of mu
};

CentralElement central_element(const HeckeAlgebra<LaurentScalar>& h, const Coweight& mu);

struct SatakeReport {
  std::vector<CentralElement> central;  // one per dominant orbit meeting the box
  bool all_central = false;
  bool independent = false;
  std::size_t truncated_dimension = 0;  // labels (lambda, w) in the truncation
  std::size_t kernel_dimension = 0;     // common kernel of the commutators at v = v0
  Rational v0;
  bool passed = false;
  std::vector<std::string> witnesses;
};

/// Truncation: lambda in the W_0-closure of {|lambda|_inf <= R}, all w.
/// The commutator map has Laurent entries, so its rank over Q(v) is at
/// least its rank at v = v0. The z_mu are in the kernel and independent,
/// so kernel dimension at v0 equal to their number proves the truncated
/// center is their span.
SatakeReport satake_check(const WeylGroup& group, std::int64_t radius, const Rational& v0 = 2);

/// Terms as "(coefficient)*theta(lambda)*T(s1 s2)"; w is written as a
/// reduced word in 1-based simple reflections.
std::string to_string(const WeylGroup& group, const HeckeElement& x);
nlohmann::json to_json(const WeylGroup& group, const HeckeElement& x);

}  // namespace hck
