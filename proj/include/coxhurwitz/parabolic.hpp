#pragma once

// Parabolic Coxeter elements, alternative simple systems of (W, T), reduced
// reflection factorizations Red_T(w) and Red_T'(w) for reflection subgroups.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "bruhat.hpp"
#include "coxeter.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "reflections.hpp"

namespace coxhurwitz {

/// True iff l_T(w) = l(w), i.e. w is a product of distinct simple generators.
inline bool is_standard_parabolic_coxeter_element(const Element& w,
                                                  std::size_t budget = default_word_length_budget) {
  return reflection_length(w, std::nullopt, budget) == w.length();
}

/// Whether some reduced word of w uses no generator twice. Searches reduced
/// words by peeling right descents.
inline bool has_distinct_letter_reduced_word(const Element& w) {
  if (w.length() > w.system().rank()) return false;
  std::vector<bool> used(w.system().rank() + 1, false);
  std::function<bool(const Element&)> rec = [&](const Element& u) {
    if (u.is_identity()) return true;
    for (int s = 1; s <= static_cast<int>(u.system().rank()); ++s) {
      if (used[s] || !u.has_right_descent(s)) continue;
      used[s] = true;
      bool hit = rec(u.times_simple(s));
      used[s] = false;
      if (hit) return true;
    }
    return false;
  };
  return rec(w);
}

struct SimpleSystemCandidate {
  std::vector<Element> reflections;
};

namespace detail {

inline void require_finite(const CoxeterSystem& sys, const char* what) {
  if (!sys.is_finite()) throw UnsupportedError(std::string(what) + " needs a finite Coxeter group");
}

inline std::size_t generated_order(const std::vector<Element>& gens, std::size_t cap) {
  const Element e = gens.front().system().identity();
  std::vector<Element> elems{e};
  ElementSet seen{e};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Element next = elems[k] * g;
      if (seen.insert(next).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap) return elems.size();
      }
    }
  return elems.size();
}

}  // namespace detail

/// Whether `cand` is a simple system for (W, T): rank-many reflections that
/// generate W, whose W-conjugates are exactly T, and for which W is the Coxeter
/// group of the product orders m'_ij = ord(t_i t_j).
inline bool validate_simple_system(const CoxeterSystem& sys, const SimpleSystemCandidate& cand) {
  detail::require_finite(sys, "validate_simple_system");
  const auto& S = cand.reflections;
  if (S.size() != sys.rank()) return false;
  for (const auto& t : S) {
    if (!(t.system() == sys)) throw ContractError("candidate reflection from a different system");
    if (!is_reflection(t)) return false;
  }
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (S[i] == S[j]) return false;

  const auto group = enumerate_group(sys);
  if (detail::generated_order(S, group.size()) != group.size()) return false;

  auto T = enumerate_reflections(sys);
  ElementSet conj;
  for (const auto& u : group) {
    const Element ui = u.inverse();
    for (const auto& t : S) conj.insert(u * t * ui);
  }
  if (conj.size() != T.size()) return false;
  for (const auto& t : T)
    if (!conj.contains(t)) return false;

  CoxeterMatrix m(S.size(), std::vector<unsigned>(S.size(), 1));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      auto order = element_order(S[i] * S[j], group.size());
      if (!order) return false;
      m[i][j] = m[j][i] = static_cast<unsigned>(*order);
    }
  const CoxeterSystem abstract = CoxeterSystem::from_matrix(m);
  if (!abstract.is_finite()) return false;
  return elements_up_to_length(abstract, static_cast<std::size_t>(-1), group.size() + 1).size() == group.size();
}

/// Is there u in W with u S1 u^{-1} = S2 as sets?
inline bool are_conjugate_systems(const CoxeterSystem& sys, const SimpleSystemCandidate& s1,
                                  const SimpleSystemCandidate& s2) {
  detail::require_finite(sys, "are_conjugate_systems");
  if (s1.reflections.size() != s2.reflections.size()) return false;
  ElementSet target(s2.reflections.begin(), s2.reflections.end());
  for (const auto& u : enumerate_group(sys)) {
    const Element ui = u.inverse();
    ElementSet image;
    for (const auto& t : s1.reflections) image.insert(u * t * ui);
    if (image == target) return true;
  }
  return false;
}

/// Every simple system of (W, T), as rank-subsets of T in ShortLex order.
inline std::vector<SimpleSystemCandidate> all_simple_systems(const CoxeterSystem& sys) {
  detail::require_finite(sys, "all_simple_systems");
  const auto T = enumerate_reflections(sys).elements();
  std::vector<SimpleSystemCandidate> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == sys.rank()) {
      SimpleSystemCandidate c;
      for (std::size_t k : pick) c.reflections.push_back(T[k]);
      if (validate_simple_system(sys, c)) out.push_back(std::move(c));
      return;
    }
    for (std::size_t k = from; k < T.size(); ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Whether w = s'_1 ... s'_k for distinct elements of some simple system S'.
/// Exhaustive over simple systems, so finite groups only.
inline bool is_parabolic_coxeter_element(const Element& w) {
  const CoxeterSystem& sys = w.system();
  detail::require_finite(sys, "is_parabolic_coxeter_element");
  if (w.is_identity()) return true;
  for (const auto& S : all_simple_systems(sys)) {
    const auto& r = S.reflections;
    std::vector<bool> used(r.size(), false);
    std::function<bool(const Element&)> rec = [&](const Element& prefix) {
      if (prefix == w) return true;
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (used[k]) continue;
        used[k] = true;
        bool hit = rec(prefix * r[k]);
        used[k] = false;
        if (hit) return true;
      }
      return false;
    };
    if (rec(sys.identity())) return true;
  }
  return false;
}

namespace detail {

// Minimal number of factors from `refl` for each element of a finite subgroup.
inline ElementMap<std::size_t> subgroup_reflection_lengths(const ReflectionSubgroup& sub) {
  const Element e = sub.elements.front().system().identity();
  ElementMap<std::size_t> dist{{e, 0}};
  std::deque<Element> queue{e};
  while (!queue.empty()) {
    Element w = queue.front();
    queue.pop_front();
    for (const auto& t : sub.reflections) {
      Element wt = w * t;
      if (dist.emplace(wt, dist.at(w) + 1).second) queue.push_back(wt);
    }
  }
  return dist;
}

inline std::vector<Factorization> enumerate_factorizations(const Element& w, const std::vector<Element>& refl,
                                                           const std::function<std::size_t(const Element&)>& len) {
  const CoxeterSystem& sys = w.system();
  std::vector<Factorization> out;
  std::vector<Element> cur;
  std::function<void(const Element&, std::size_t)> rec = [&](const Element& rest, std::size_t n) {
    if (n == 0) {
      out.emplace_back(sys, cur);
      return;
    }
    for (const auto& t : refl) {
      Element next = t * rest;
      if (len(next) != n - 1) continue;
      cur.push_back(t);
      rec(next, n - 1);
      cur.pop_back();
    }
  };
  rec(w, len(w));
  std::sort(out.begin(), out.end(),
            [](const Factorization& a, const Factorization& b) { return shortlex_less(a, b); });
  return out;
}

}  // namespace detail

/// Red_T(w): all factorizations of w into l_T(w) reflections, ShortLex-sorted.
inline std::vector<Factorization> red_enumerate(const Element& w,
                                                std::size_t budget = default_word_length_budget) {
  detail::require_finite(w.system(), "red_enumerate over the whole group");
  const auto T = enumerate_reflections(w.system()).elements();
  return detail::enumerate_factorizations(
      w, T, [budget](const Element& u) { return reflection_length(u, std::nullopt, budget); });
}

/// Red_T'(w) for a reflection subgroup W' containing w, with lengths measured
/// by T' = T ∩ W' inside W'.
inline std::vector<Factorization> red_enumerate(const Element& w, const ReflectionSubgroup& sub) {
  if (!sub.complete) throw UnsupportedError("red_enumerate needs a fully enumerated subgroup");
  if (!sub.contains(w)) throw ContractError("element is not in the reflection subgroup");
  const auto lengths = detail::subgroup_reflection_lengths(sub);
  return detail::enumerate_factorizations(w, sub.reflections,
                                          [&lengths](const Element& u) { return lengths.at(u); });
}

/// Red_T(w) = Red_T'(w) for w in W'.
inline bool theorem2_check(const ReflectionSubgroup& sub, const Element& w,
                           std::size_t budget = default_word_length_budget) {
  if (!sub.complete) throw UnsupportedError("theorem2_check needs a fully enumerated subgroup");
  if (!sub.contains(w)) throw ContractError("theorem2_check: element is not in the subgroup");
  return red_enumerate(w, budget) == red_enumerate(w, sub);
}

/// W_c = <t_1, ..., t_n> for a reduced factorization of c.
inline ReflectionSubgroup parabolic_closure_of_factorization(const Factorization& f,
                                                             std::size_t budget = default_set_budget) {
  if (!is_reduced_factorization(f.entries())) throw ContractError("factorization is not reduced");
  if (f.size() == 0) {
    ReflectionSubgroup trivial;
    trivial.elements = {f.system().identity()};
    trivial.member_index = {f.system().identity()};
    trivial.complete = true;
    return trivial;
  }
  auto sub = subgroup_closure(f.entries(), budget);
  if (!sub.complete) throw BudgetError("parabolic closure exceeded budget");
  return sub;
}

}  // namespace coxhurwitz
