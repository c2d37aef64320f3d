#pragma once

// Reflections T, reflection length, and reflection subgroups W' with T' = T ∩ W'.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"

namespace coxhurwitz {

/// Default cap on the canonical-word length fed to the deletion search.
inline constexpr std::size_t default_word_length_budget = 16;

/// Default cap on enumerated set sizes (orbits, subgroup closures).
inline constexpr std::size_t default_set_budget = 100'000;

class ReflectionSet {
public:
  enum class Completeness { full, depth_bounded };

  ReflectionSet(std::vector<Element> reflections, Completeness tag, std::size_t depth = 0)
      : reflections_(std::move(reflections)), tag_(tag), depth_(depth),
        index_(reflections_.begin(), reflections_.end()) {}

  const std::vector<Element>& elements() const noexcept { return reflections_; }
  std::size_t size() const noexcept { return reflections_.size(); }
  Completeness completeness() const noexcept { return tag_; }
  /// Maximal Coxeter length included; meaningful for depth_bounded sets.
  std::size_t depth() const noexcept { return depth_; }
  bool contains(const Element& t) const { return index_.contains(t); }

  auto begin() const { return reflections_.begin(); }
  auto end() const { return reflections_.end(); }

private:
  std::vector<Element> reflections_;
  Completeness tag_;
  std::size_t depth_;
  ElementSet index_;
};

/// All reflections (finite W), or all of length <= depth. Sorted ShortLex.
///
/// A reflection t of length > 1 is s t' s for its smallest left descent s and a
/// reflection t' two shorter, so closing S under conjugation by S in order of
/// length reaches every reflection up to the bound.
inline ReflectionSet enumerate_reflections(const CoxeterSystem& sys,
                                           std::optional<std::size_t> depth = std::nullopt) {
  if (!sys.is_finite() && !depth)
    throw BudgetError("reflection enumeration in an infinite group needs a depth bound");
  const std::size_t bound = depth.value_or(static_cast<std::size_t>(-1));
  std::vector<Element> out;
  ElementSet seen;
  std::deque<Element> queue;
  for (int s = 1; s <= static_cast<int>(sys.rank()); ++s) {
    if (bound < 1) break;
    Element g = sys.generator(s);
    seen.insert(g);
    queue.push_back(g);
  }
  while (!queue.empty()) {
    Element t = std::move(queue.front());
    queue.pop_front();
    out.push_back(t);
    for (int s = 1; s <= static_cast<int>(sys.rank()); ++s) {
      Element c = t.simple_times(s).times_simple(s);
      if (c.length() <= t.length() || c.length() > bound) continue;
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  sort_shortlex(out);
  auto tag = ReflectionSet::Completeness::depth_bounded;
  if (sys.is_finite()) {
    // The bounded search still terminates; decide whether anything lies beyond it.
    tag = ReflectionSet::Completeness::full;
    if (depth)
      for (const auto& t : out)
        for (int s = 1; s <= static_cast<int>(sys.rank()); ++s) {
          Element c = t.simple_times(s).times_simple(s);
          if (c.length() > bound) tag = ReflectionSet::Completeness::depth_bounded;
        }
  }
  return ReflectionSet(std::move(out), tag, depth.value_or(0));
}

namespace detail {

// Is there a set of exactly `deletions` positions in word[pos..] whose removal
// makes prefix * (kept letters) the identity?
inline bool deletion_search(const Word& word, std::size_t pos, std::size_t deletions,
                            const Element& prefix) {
  const std::size_t remaining = word.size() - pos;
  if (deletions > remaining) return false;
  if (remaining == deletions) return prefix.is_identity();
  // keep word[pos]
  if (deletion_search(word, pos + 1, deletions, prefix.times_simple(word[pos]))) return true;
  // delete word[pos]
  return deletions > 0 && deletion_search(word, pos + 1, deletions - 1, prefix);
}

}  // namespace detail

/// Reflection length l_T(w): the fewest letters of a reduced word of w whose
/// deletion leaves a word for the identity. The search runs on the canonical
/// word, or on `reduced_word` when given (the answer does not depend on it).
inline std::size_t reflection_length(const Element& w,
                                     std::optional<Word> reduced_word = std::nullopt,
                                     std::size_t budget = default_word_length_budget) {
  const auto& data = w.system().data();
  {
    std::lock_guard lock(data.memo_mu);
    if (auto it = data.reflection_length_memo.find(w.matrix()); it != data.reflection_length_memo.end())
      return it->second;
  }
  const Word word = reduced_word ? *reduced_word : w.canonical_word();
  if (reduced_word && (word.size() != w.length() || !(w.system().element(word) == w)))
    throw ContractError("supplied word is not a reduced word for the element");
  if (word.size() > budget)
    throw BudgetError("reflection length: word length " + std::to_string(word.size()) +
                      " exceeds budget " + std::to_string(budget));

  std::size_t result = word.size();
  for (std::size_t k = word.size() % 2; k <= word.size(); k += 2) {
    if (detail::deletion_search(word, 0, k, w.system().identity())) {
      result = k;
      break;
    }
  }
  std::lock_guard lock(data.memo_mu);
  data.reflection_length_memo.emplace(w.matrix(), result);
  return result;
}

/// A reflection subgroup W' = <generators> with its reflections T' = T ∩ W'.
struct ReflectionSubgroup {
  std::vector<Element> generators;
  /// Elements of W', ShortLex-sorted; complete only when `complete` is set.
  std::vector<Element> elements;
  std::vector<Element> reflections;
  std::vector<Element> canonical_simples;
  bool complete = false;

  /// Membership; requires a complete enumeration.
  bool contains(const Element& w) const {
    if (!complete) throw UnsupportedError("membership test on a partially enumerated subgroup");
    return member_index.contains(w);
  }

  ElementSet member_index;
};

inline std::vector<Element> canonical_simple_system(const ReflectionSubgroup& sub);

/// BFS closure of the generated subgroup. Past `budget` elements the result is
/// returned partial with `complete == false` and no canonical simple system.
inline ReflectionSubgroup subgroup_closure(const std::vector<Element>& gens,
                                           std::size_t budget = default_set_budget) {
  if (gens.empty()) throw ContractError("subgroup_closure needs at least one generator");
  const CoxeterSystem& sys = gens.front().system();
  for (const auto& g : gens) {
    if (!(g.system() == sys)) throw ContractError("generators from different Coxeter systems");
    if (!is_reflection(g)) throw ContractError("subgroup generators must be reflections");
  }
  ReflectionSubgroup sub;
  sub.generators = gens;
  std::vector<Element> elems{sys.identity()};
  ElementSet seen{elems.front()};
  bool complete = true;
  for (std::size_t k = 0; k < elems.size() && complete; ++k) {
    for (const auto& g : gens) {
      Element next = elems[k] * g;
      if (seen.insert(next).second) {
        elems.push_back(std::move(next));
        if (elems.size() > budget) {
          complete = false;
          break;
        }
      }
    }
  }
  sort_shortlex(elems);
  sub.member_index = std::move(seen);
  sub.elements = std::move(elems);
  sub.complete = complete;
  for (const auto& e : sub.elements)
    if (is_reflection(e)) sub.reflections.push_back(e);
  if (complete) sub.canonical_simples = canonical_simple_system(sub);
  return sub;
}

/// The t in T' whose positive root alpha_t is simple in the root subsystem of
/// W': s_t maps every other positive root of W' to a positive root.
inline std::vector<Element> canonical_simple_system(const ReflectionSubgroup& sub) {
  if (!sub.complete)
    throw UnsupportedError("canonical simple system needs a fully enumerated subgroup");
  std::vector<Root> roots;
  roots.reserve(sub.reflections.size());
  for (const auto& t : sub.reflections) roots.push_back(reflection_root(t));
  std::vector<Element> simples;
  for (std::size_t i = 0; i < sub.reflections.size(); ++i) {
    bool simple = true;
    for (std::size_t j = 0; j < roots.size() && simple; ++j) {
      if (i == j) continue;
      Root image{sub.reflections[i].matrix().apply(roots[j].coordinates)};
      if (image.sign() != Sign::positive) simple = false;
    }
    if (simple) simples.push_back(sub.reflections[i]);
  }
  sort_shortlex(simples);
  return simples;
}

/// Reflections of <t1, t2> along the line r_k = rho^k t1, rho = t1 t2, for
/// k in [first, last]. r_0 = t1, r_{-1} = t2, and consecutive pairs
/// (r_k, r_{k-1}) all have product rho.
inline std::vector<std::pair<long, Element>> dihedral_reflection_line(const Element& t1,
                                                                      const Element& t2,
                                                                      long first, long last) {
  if (t1 == t2) throw ContractError("dihedral_reflection_line needs distinct reflections");
  const Element rho = t1 * t2;
  const Element rho_inv = t2 * t1;
  std::vector<std::pair<long, Element>> out;
  if (first > last) return out;
  Element cur = t1;  // rho^first t1
  if (first > 0)
    for (long k = 0; k < first; ++k) cur = rho * cur;
  else
    for (long k = 0; k > first; --k) cur = rho_inv * cur;
  for (long k = first; k <= last; ++k) {
    out.emplace_back(k, cur);
    cur = rho * cur;
  }
  return out;
}

/// Multiplicative order of w, or nullopt if it exceeds `limit`.
inline std::optional<std::size_t> element_order(const Element& w, std::size_t limit = 10'000) {
  Element p = w;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * w;
  }
  return std::nullopt;
}

}  // namespace coxhurwitz
