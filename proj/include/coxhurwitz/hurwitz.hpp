#pragma once

// The Hurwitz action of the braid group B_n on n-tuples of reflections, the
// straightening of a reduced factorization into a valley-shaped Bruhat path,
// and explicit braids carrying any reduced factorization of a Coxeter element
// c = s_1 ... s_n to (s_1, ..., s_n).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bruhat.hpp"
#include "coxeter.hpp"
#include "errors.hpp"
#include "reflections.hpp"

namespace coxhurwitz {

/// An ordered tuple of reflections together with its product.
class Factorization {
public:
  /// Checks that every entry is a reflection of `sys`.
  Factorization(CoxeterSystem sys, std::vector<Element> entries)
      : Factorization(std::move(sys), std::move(entries), unchecked{}) {
    for (const auto& t : entries_) {
      if (!(t.system() == sys_)) throw ContractError("factorization entry from a different system");
      if (!is_reflection(t)) throw DomainError("factorization entry is not a reflection");
    }
  }

  /// Entries as words; each must evaluate to a reflection.
  static Factorization from_words(const CoxeterSystem& sys, const std::vector<Word>& words) {
    std::vector<Element> entries;
    for (const auto& w : words) entries.push_back(sys.element(w));
    return Factorization(sys, std::move(entries));
  }

  /// The tuple (s_{c_1}, ..., s_{c_n}).
  static Factorization of_generators(const CoxeterSystem& sys, const Word& letters) {
    std::vector<Element> entries;
    for (int s : letters) entries.push_back(sys.generator(s));
    return Factorization(sys, std::move(entries), unchecked{});
  }

  const CoxeterSystem& system() const noexcept { return sys_; }
  const std::vector<Element>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Element& operator[](std::size_t k) const { return entries_[k]; }
  const Element& product() const noexcept { return product_; }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.sys_ == b.sys_ && a.entries_ == b.entries_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = entries_.size();
    for (const auto& t : entries_) h = h * 0x9e3779b97f4a7c15ull ^ t.hash();
    return h;
  }

  /// Lexicographic in the ShortLex order of the entries.
  friend bool shortlex_less(const Factorization& a, const Factorization& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (shortlex_less(a[k], b[k])) return true;
      if (shortlex_less(b[k], a[k])) return false;
    }
    return false;
  }

private:
  struct unchecked {};
  Factorization(CoxeterSystem sys, std::vector<Element> entries, unchecked)
      : sys_(std::move(sys)), entries_(std::move(entries)), product_(sys_.identity()) {
    for (const auto& t : entries_) product_ = product_ * t;
  }

  friend Factorization apply_sigma(const Factorization&, std::size_t, int);

  CoxeterSystem sys_;
  std::vector<Element> entries_;
  Element product_;
};

struct FactorizationHash {
  std::size_t operator()(const Factorization& f) const noexcept { return f.hash(); }
};

/// sigma_i^{sign}, with i 1-based.
struct BraidLetter {
  std::size_t index;
  int sign;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the braid generators, stored in written order: the rightmost
/// letter acts first, as for composed functions.
struct BraidWord {
  std::vector<BraidLetter> letters;

  static BraidWord from_application_order(std::span<const BraidLetter> applied) {
    BraidWord b;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) b.letters.push_back(*it);
    return b;
  }

  std::vector<BraidLetter> application_order() const { return {letters.rbegin(), letters.rend()}; }

  /// Append a letter acting after everything already in the word.
  void apply_after(BraidLetter l) {
    if (!letters.empty() && letters.front().index == l.index && letters.front().sign == -l.sign)
      letters.erase(letters.begin());
    else
      letters.insert(letters.begin(), l);
  }

  /// The braid "first *this, then next".
  BraidWord then(const BraidWord& next) const {
    BraidWord out = *this;
    for (const auto& l : next.application_order()) out.apply_after(l);
    return out;
  }

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Written-order braid from the familiar notation, e.g. {1, 2, 4, 3, 2} for
/// sigma_1 sigma_2 sigma_4 sigma_3 sigma_2.
inline BraidWord positive_braid(std::initializer_list<std::size_t> written) {
  BraidWord b;
  for (std::size_t i : written) b.letters.push_back({i, +1});
  return b;
}

/// sigma_i^{+1}: (.., t_i, t_{i+1}, ..) -> (.., t_i t_{i+1} t_i, t_i, ..)
/// sigma_i^{-1}: (.., t_i, t_{i+1}, ..) -> (.., t_{i+1}, t_{i+1} t_i t_{i+1}, ..)
inline Factorization apply_sigma(const Factorization& f, std::size_t i, int sign) {
  if (i < 1 || i >= f.size())
    throw ContractError("braid generator index " + std::to_string(i) + " out of range for arity " +
                        std::to_string(f.size()));
  if (sign != 1 && sign != -1) throw ContractError("braid letter sign must be +1 or -1");
  Factorization out = f;
  Element& a = out.entries_[i - 1];
  Element& b = out.entries_[i];
  if (sign > 0) {
    Element conj = a * b * a;
    b = a;
    a = std::move(conj);
  } else {
    Element conj = b * a * b;
    a = b;
    b = std::move(conj);
  }
  return out;
}

inline Factorization apply_braid(const Factorization& f, const BraidWord& b) {
  Factorization cur = f;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) cur = apply_sigma(cur, it->index, it->sign);
  return cur;
}

/// Thrown when an orbit outgrows its budget; carries what was found.
class OrbitBudgetError : public BudgetError {
public:
  OrbitBudgetError(std::vector<Factorization> partial)
      : BudgetError("Hurwitz orbit exceeded budget of " + std::to_string(partial.size()) + " tuples"),
        partial_(std::move(partial)) {}
  const std::vector<Factorization>& partial() const noexcept { return partial_; }

private:
  std::vector<Factorization> partial_;
};

/// The B_n-orbit of f, sorted by shortlex_less.
inline std::vector<Factorization> hurwitz_orbit(const Factorization& f,
                                                std::size_t budget = default_set_budget) {
  if (budget < 1) throw ContractError("orbit budget must be at least 1");
  std::vector<Factorization> orbit{f};
  std::unordered_set<Factorization, FactorizationHash> seen{f};
  bool overflow = false;
  for (std::size_t k = 0; k < orbit.size() && !overflow; ++k)
    for (std::size_t i = 1; i < f.size() && !overflow; ++i)
      for (int sign : {1, -1}) {
        Factorization g = apply_sigma(orbit[k], i, sign);
        if (seen.insert(g).second) {
          if (orbit.size() == budget) {
            overflow = true;
            break;
          }
          orbit.push_back(std::move(g));
        }
      }
  std::sort(orbit.begin(), orbit.end(),
            [](const Factorization& a, const Factorization& b) { return shortlex_less(a, b); });
  if (overflow) throw OrbitBudgetError(std::move(orbit));
  return orbit;
}

struct DescentResolution {
  Element t1;
  Element t2;
  /// sigma^power carries (t1, t2) to the new pair.
  long power;
};

/// Replaces an up-down step z -> z t1 <- z t1 t2 by a pair (t1', t2') from the
/// dihedral reflection line of <t1, t2> with the same product whose middle vertex
/// is no longer a peak. The line is searched outward from k = 0, -k before +k.
inline DescentResolution resolve_descent(const Element& z, const Element& t1, const Element& t2) {
  if (t1 == t2) throw ContractError("resolve_descent needs distinct reflections");
  const Element zt1 = z * t1;
  const Element zt1t2 = zt1 * t2;
  const std::size_t lz = z.length(), lmid = zt1.length(), lend = zt1t2.length();
  if (!(lz < lmid && lend < lmid)) throw ContractError("resolve_descent needs an up-down pattern at z");
  const std::size_t peak_bound = std::max(lz, lend);

  const Element rho = t1 * t2;
  const Element rho_inv = t2 * t1;

  // r_k = rho^k t1; candidate pair for power k is (r_k, r_{k-1}).
  Element fwd_prev = t1;  // r_{k-1} on the positive side
  Element fwd = rho * t1;  // r_k
  Element back = t2;       // r_{-k} on the negative side
  Element back_next = rho_inv * t2;  // r_{-k-1}
  for (long k = 1; k <= 100'000; ++k) {
    if (fwd == t1) break;  // full period searched
    if ((z * back).length() < peak_bound) return {back, back_next, -k};
    if ((z * fwd).length() < peak_bound) return {fwd, fwd_prev, k};
    fwd_prev = fwd;
    fwd = rho * fwd;
    back = back_next;
    back_next = rho_inv * back_next;
  }
  throw InternalError("no admissible pair on the dihedral reflection line");
}

struct StraightenResult {
  Factorization factorization;
  BraidWord witness;  // apply_braid(input, witness) == factorization
  std::size_t pivot;
};

/// Hurwitz-moves a reduced factorization until its path from x first descends
/// and then ascends in length. The leftmost up-down position is resolved first.
inline StraightenResult straighten(const Factorization& f, const Element& x,
                                   std::size_t budget = default_word_length_budget) {
  if (!is_reduced_factorization(f.entries(), budget))
    throw ContractError("straighten needs a reduced factorization");
  std::vector<Element> steps = f.entries();
  std::vector<Element> vertices{x};
  std::vector<std::size_t> lengths{x.length()};
  for (const auto& t : steps) {
    vertices.push_back(vertices.back() * t);
    lengths.push_back(vertices.back().length());
  }
  BraidWord witness;
  std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  for (;;) {
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 2 < vertices.size() && !pos; ++i)
      if (lengths[i] < lengths[i + 1] && lengths[i + 2] < lengths[i + 1]) pos = i;
    if (!pos) break;
    const std::size_t i = *pos;
    DescentResolution r = resolve_descent(vertices[i], steps[i], steps[i + 1]);
    steps[i] = r.t1;
    steps[i + 1] = r.t2;
    vertices[i + 1] = vertices[i] * r.t1;
    lengths[i + 1] = vertices[i + 1].length();
    const int sign = r.power > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(r.power); ++k) witness.apply_after({i + 1, sign});
    std::size_t next_total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    if (next_total >= total) throw InternalError("replacement did not decrease the total length");
    total = next_total;
  }
  std::vector<Direction> pattern;
  for (std::size_t k = 0; k + 1 < lengths.size(); ++k)
    pattern.push_back(lengths[k] < lengths[k + 1] ? Direction::up : Direction::down);
  PathShape shape = classify_shape(pattern);
  if (!shape.is_valley()) throw InternalError("straightened path is not a valley");
  Factorization g = apply_braid(f, witness);
  if (g.entries() != steps) throw InternalError("straightening witness does not reproduce the result");
  return {std::move(g), std::move(witness), *shape.pivot};
}

/// A permutation of 1..n in one-line notation.
struct InsertionPermutation {
  std::vector<std::size_t> values;

  explicit InsertionPermutation(std::vector<std::size_t> v) : values(std::move(v)) {
    std::vector<bool> hit(values.size() + 1, false);
    for (std::size_t x : values) {
      if (x < 1 || x > values.size() || hit[x]) throw ContractError("not a permutation of 1..n");
      hit[x] = true;
    }
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < values.size(); ++k)
      if (values[k] != k + 1) return false;
    return true;
  }

  friend bool operator==(const InsertionPermutation&, const InsertionPermutation&) = default;
};

namespace detail {

inline void require_distinct_letters(const Word& c_word) {
  std::set<int> letters(c_word.begin(), c_word.end());
  if (letters.size() != c_word.size())
    throw ContractError("Coxeter element word must have pairwise distinct letters");
}

}  // namespace detail

/// For a factorization whose path from e climbs through c = c_word, the order
/// in which the positions of c_word are inserted: the i-th prefix t_1 ... t_i
/// equals the subword of c_word on positions {pi_1, ..., pi_i}.
inline InsertionPermutation extract_insertion_permutation(const Factorization& f, const Word& c_word) {
  detail::require_distinct_letters(c_word);
  const CoxeterSystem& sys = f.system();
  if (f.size() != c_word.size()) throw ContractError("factorization arity differs from the word length");
  if (!(f.product() == sys.element(c_word)))
    throw ContractError("factorization product differs from the Coxeter element");
  const std::size_t n = c_word.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> pi;
  Element prefix = sys.identity();
  for (std::size_t i = 0; i < n; ++i) {
    prefix = prefix * f[i];
    std::optional<std::size_t> match;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      Word sub;
      for (std::size_t p = 0; p < n; ++p)
        if (used[p] || p == j) sub.push_back(c_word[p]);
      if (sys.element(sub) == prefix) {
        if (match) throw ContractError("insertion position is not unique");
        match = j;
      }
    }
    if (!match) throw ContractError("factorization is not a directed path from e to c");
    used[*match] = true;
    pi.push_back(*match + 1);
  }
  return InsertionPermutation(std::move(pi));
}

/// Sorts pi by swapping the leftmost descent, emitting sigma_i for each swap in
/// application order.
inline BraidWord permutation_to_braid(const InsertionPermutation& perm) {
  std::vector<std::size_t> pi = perm.values;
  std::vector<BraidLetter> applied;
  for (;;) {
    std::optional<std::size_t> i;
    for (std::size_t k = 0; k + 1 < pi.size() && !i; ++k)
      if (pi[k] > pi[k + 1]) i = k;
    if (!i) break;
    std::swap(pi[*i], pi[*i + 1]);
    applied.push_back({*i + 1, +1});
  }
  return BraidWord::from_application_order(applied);
}

/// A braid b with b(f) = (s_{c_1}, ..., s_{c_n}), verified before returning.
inline BraidWord transitivity_braid(const Factorization& f, const Word& c_word,
                                    std::size_t budget = default_word_length_budget) {
  detail::require_distinct_letters(c_word);
  const CoxeterSystem& sys = f.system();
  if (!(f.product() == sys.element(c_word)))
    throw ContractError("factorization product differs from the Coxeter element");
  StraightenResult s = straighten(f, sys.identity(), budget);
  BraidWord b = s.witness.then(permutation_to_braid(extract_insertion_permutation(s.factorization, c_word)));
  if (!(apply_braid(f, b) == Factorization::of_generators(sys, c_word)))
    throw InternalError("transitivity braid failed verification");
  return b;
}

}  // namespace coxhurwitz
