#include "hck/weyl.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "hck/error.hpp"

namespace hck {

WeylGroup::WeylGroup(const RootDatum& datum, std::size_t cap) : datum_(datum) {
  const std::size_t ss = datum_.semisimple_rank();
  const std::size_t n = datum_.rank();
  std::vector<IntMatrix> refl, refl_t;
  for (std::size_t i = 0; i < ss; ++i) {
    refl.push_back(datum_.simple_reflection(i));
    refl_t.push_back(refl.back().transpose());
  }
  elements_.push_back({{}, IntMatrix::identity(n), IntMatrix::identity(n)});
  index_.emplace(elements_[0].action, 0);
  for (std::size_t cur = 0; cur < elements_.size(); ++cur) {
    for (std::size_t s = 0; s < ss; ++s) {
      IntMatrix act = elements_[cur].action * refl[s];
      if (index_.contains(act)) continue;
      if (elements_.size() >= cap)
        throw CapExceeded("Weyl group of " + datum_.name() + " exceeds the enumeration cap of " +
                          std::to_string(cap) + " elements");
      WeylElement e;
      e.word = elements_[cur].word;
      e.word.push_back(s);
      e.dual_action = elements_[cur].dual_action * refl_t[s];
      e.action = std::move(act);
      index_.emplace(e.action, elements_.size());
      elements_.push_back(std::move(e));
    }
  }
  const std::size_t size = elements_.size();
  right_.assign(size, std::vector<std::size_t>(ss));
  left_.assign(size, std::vector<std::size_t>(ss));
  inverse_.resize(size);
  length_.resize(size);
  const auto positives = datum_.positive_roots();
  for (std::size_t w = 0; w < size; ++w) {
    for (std::size_t s = 0; s < ss; ++s) {
      right_[w][s] = index_.at(elements_[w].action * refl[s]);
      left_[w][s] = index_.at(refl[s] * elements_[w].action);
    }
    IntMatrix inv = IntMatrix::identity(n);
    for (auto it = elements_[w].word.rbegin(); it != elements_[w].word.rend(); ++it) inv = inv * refl[*it];
    inverse_[w] = index_.at(inv);
    std::size_t inversions = 0;
    for (auto a : positives) {
      const auto img = elements_[w].apply_to_character(datum_.root(a).character);
      if (!datum_.root(*datum_.find_root(img)).positive) ++inversions;
    }
    length_[w] = inversions;
    if (inversions != elements_[w].word.size()) throw InternalError("non-reduced word in Weyl enumeration");
  }
}

std::size_t WeylGroup::index_of(const IntMatrix& action) const {
  auto it = index_.find(action);
  if (it == index_.end()) throw InputError("matrix is not a Weyl group element: " + action.to_string());
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  std::size_t r = a;
  for (auto s : elements_[b].word) r = right_[r][s];
  return r;
}

std::vector<std::size_t> WeylGroup::parabolic(std::span<const std::size_t> theta) const {
  std::vector<std::size_t> out{0};
  std::set<std::size_t> seen{0};
  for (std::size_t cur = 0; cur < out.size(); ++cur)
    for (auto s : theta) {
      const auto nxt = right_[out[cur]][s];
      if (seen.insert(nxt).second) out.push_back(nxt);
    }
  return out;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, std::size_t cap) {
  return WeylGroup(datum, cap).elements();
}

std::pair<std::size_t, std::size_t> coset_decompose(const WeylGroup& group, std::size_t w,
                                                    std::span<const std::size_t> theta) {
  const RootDatum& d = group.datum();
  std::optional<std::pair<std::size_t, std::size_t>> found;
  for (auto w1 : group.parabolic(theta)) {
    const std::size_t w2 = group.multiply(group.inverse(w1), w);
    const auto& w2inv = group[group.inverse(w2)];
    bool positive = true;
    for (auto t : theta) {
      const auto img = w2inv.apply_to_character(d.root(d.simple_roots()[t]).character);
      if (!d.root(*d.find_root(img)).positive) {
        positive = false;
        break;
      }
    }
    if (!positive) continue;
    if (found) throw InternalError("parabolic coset decomposition is not unique");
    found = std::make_pair(w1, w2);
  }
  if (!found) throw InternalError("no parabolic coset decomposition found");
  return *found;
}

std::vector<Coweight> weyl_orbit(const RootDatum& datum, const Coweight& lambda) {
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight cur = std::move(queue.front());
    queue.pop_front();
    for (auto s : datum.simple_roots()) {
      Coweight img = datum.reflect(s, cur);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

Coweight dominant_representative(const RootDatum& datum, const Coweight& lambda) {
  Coweight cur = lambda;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto s : datum.simple_roots())
      if (datum.pairing(datum.root(s).character, cur) < 0) {
        cur = datum.reflect(s, cur);
        moved = true;
      }
  }
  return cur;
}

std::size_t stabilizer_order(const WeylGroup& group, const Coweight& lambda) {
  std::size_t count = 0;
  for (const auto& w : group.elements())
    if (w.apply(lambda) == lambda) ++count;
  return count;
}

}  // namespace hck
