#pragma once

// Coxeter systems and their elements, realized in the standard geometric
// representation: W acts on the span of the simple roots alpha_1..alpha_m, and
// an Element is stored as the exact matrix of that action (column j holds the
// coordinates of w(alpha_j)).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace coxhurwitz {

/// Word in the simple generators, 1-based indices.
using Word = std::vector<int>;

/// Symmetric Coxeter matrix; entries use `infinity` for m = infinity.
using CoxeterMatrix = std::vector<std::vector<unsigned>>;

/// A vector in simple-root coordinates.
struct Root {
  std::vector<Scalar> coordinates;

  /// Positive or negative; a mixed-sign vector is not a root and throws InternalError.
  Sign sign() const {
    Sign seen = Sign::zero;
    for (const auto& c : coordinates) {
      Sign s = c.sign();
      if (s == Sign::zero) continue;
      if (seen == Sign::zero)
        seen = s;
      else if (seen != s)
        throw InternalError("vector with mixed-sign coordinates where a root was expected");
    }
    return seen;
  }

  friend bool operator==(const Root&, const Root&) = default;
};

class Element;

namespace detail {

struct SystemData {
  unsigned rank = 0;
  CoxeterMatrix coxeter;
  const CyclotomicField* field = nullptr;
  std::unique_ptr<ScalarMatrix> bilinear;
  std::vector<std::vector<Scalar>> cartan;  // 2 B(alpha_s, alpha_t)
  std::vector<ScalarMatrix> simple;
  bool finite = false;

  mutable std::mutex memo_mu;
  mutable std::unordered_map<ScalarMatrix, std::size_t> reflection_length_memo;
};

}  // namespace detail

class CoxeterSystem {
public:
  /// Validates the matrix and builds the bilinear form and simple reflections exactly.
  static CoxeterSystem from_matrix(const CoxeterMatrix& m);

  unsigned rank() const noexcept { return d_->rank; }
  const CoxeterMatrix& coxeter_matrix() const noexcept { return d_->coxeter; }
  unsigned entry(int s, int t) const { return d_->coxeter.at(s - 1).at(t - 1); }
  unsigned level() const noexcept { return d_->field->level(); }
  const CyclotomicField& field() const noexcept { return *d_->field; }
  const ScalarMatrix& bilinear_form() const noexcept { return *d_->bilinear; }
  const ScalarMatrix& simple_reflection_matrix(int s) const { return d_->simple.at(s - 1); }
  const Scalar& cartan(int s, int t) const { return d_->cartan[s - 1][t - 1]; }

  /// True iff W is finite, i.e. the bilinear form is positive definite.
  bool is_finite() const noexcept { return d_->finite; }

  Element identity() const;
  Element generator(int s) const;
  Element element(const Word& word) const;

  const detail::SystemData& data() const noexcept { return *d_; }

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) { return a.d_ == b.d_; }

private:
  explicit CoxeterSystem(std::shared_ptr<const detail::SystemData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::SystemData> d_;
};

class Element {
public:
  Element(CoxeterSystem sys, ScalarMatrix m)
      : sys_(std::move(sys)), m_(std::move(m)), cache_(std::make_shared<Cache>()) {}

  const CoxeterSystem& system() const noexcept { return sys_; }
  const ScalarMatrix& matrix() const noexcept { return m_; }

  bool is_identity() const { return m_.is_identity(); }

  friend Element operator*(const Element& a, const Element& b) {
    if (!(a.sys_ == b.sys_)) throw ContractError("elements belong to different Coxeter systems");
    return Element(a.sys_, a.m_ * b.m_);
  }

  /// w * s_s, computed as a column operation.
  Element times_simple(int s) const {
    ScalarMatrix out = m_;
    right_multiply_simple(out, s);
    return Element(sys_, std::move(out));
  }

  /// s_s * w, computed as a row operation.
  Element simple_times(int s) const {
    const std::size_t n = m_.size();
    const std::size_t i = static_cast<std::size_t>(s - 1);
    ScalarMatrix out = m_;
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = m_(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = sys_.data().cartan[i][k];
        if (c.is_zero() || m_(k, j).is_zero()) continue;
        acc -= c * m_(k, j);
      }
      out(i, j) = std::move(acc);
    }
    return Element(sys_, std::move(out));
  }

  Element inverse() const {
    std::call_once(cache_->inverse_once, [this] {
      // w = s_{r_k} ... s_{r_1} for the descent sequence r, so w^{-1} = s_{r_1} ... s_{r_k}.
      ScalarMatrix inv = ScalarMatrix::identity(sys_.field(), sys_.rank());
      for (int s : descent_sequence(m_)) right_multiply_simple(inv, s);
      cache_->inverse = std::make_unique<ScalarMatrix>(std::move(inv));
    });
    return Element(sys_, *cache_->inverse);
  }

  /// The root w(alpha_s).
  Root image_of_simple_root(int s) const { return Root{m_.column(static_cast<std::size_t>(s - 1))}; }

  /// l(w s) < l(w), decided by the sign of w(alpha_s).
  bool has_right_descent(int s) const { return image_of_simple_root(s).sign() == Sign::negative; }

  /// l(s w) < l(w).
  bool has_left_descent(int s) const { return inverse().has_right_descent(s); }

  /// ShortLex-minimal reduced word (greedy smallest left descent).
  const Word& canonical_word() const {
    std::call_once(cache_->word_once, [this] { cache_->word = descent_sequence(inverse().m_); });
    return cache_->word;
  }

  std::size_t length() const { return canonical_word().size(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.sys_ == b.sys_ && a.m_ == b.m_;
  }

  std::size_t hash() const noexcept { return m_.hash(); }

private:
  struct Cache {
    std::once_flag word_once;
    Word word;
    std::once_flag inverse_once;
    std::unique_ptr<ScalarMatrix> inverse;
  };

  void right_multiply_simple(ScalarMatrix& m, int s) const {
    const std::size_t n = m.size();
    const std::size_t i = static_cast<std::size_t>(s - 1);
    const auto& cartan = sys_.data().cartan[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cartan[j].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (!m(r, i).is_zero()) m(r, j) -= cartan[j] * m(r, i);
    }
    for (std::size_t r = 0; r < n; ++r) m(r, i) = -m(r, i);
  }

  // Repeatedly strips the smallest right descent; returns the stripped generators in order.
  Word descent_sequence(ScalarMatrix u) const {
    Word out;
    const int n = static_cast<int>(sys_.rank());
    for (;;) {
      int found = 0;
      for (int s = 1; s <= n && !found; ++s)
        if (Root{u.column(static_cast<std::size_t>(s - 1))}.sign() == Sign::negative) found = s;
      if (!found) break;
      out.push_back(found);
      right_multiply_simple(u, found);
    }
    if (!u.is_identity()) throw InternalError("descent loop ended away from the identity");
    return out;
  }

  CoxeterSystem sys_;
  ScalarMatrix m_;
  std::shared_ptr<Cache> cache_;
};

/// ShortLex order on words: shorter first, then lexicographic.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// ShortLex order on elements via their canonical words.
inline bool shortlex_less(const Element& a, const Element& b) {
  return shortlex_less(a.canonical_word(), b.canonical_word());
}

inline void sort_shortlex(std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [](const Element& a, const Element& b) { return shortlex_less(a, b); });
}

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

using ElementSet = std::unordered_set<Element, ElementHash>;
template <typename V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;

inline CoxeterSystem CoxeterSystem::from_matrix(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ValidationError("Coxeter matrix must have rank >= 1");
  std::vector<unsigned> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ValidationError("Coxeter matrix must be square");
    if (m[i][i] != 1) throw ValidationError("diagonal entries of a Coxeter matrix must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw ValidationError("Coxeter matrix must be symmetric");
      if (m[i][j] != infinity && m[i][j] < 2)
        throw ValidationError("off-diagonal Coxeter entries must be >= 2 or infinity");
      if (i < j) entries.push_back(m[i][j]);
    }
  }

  auto d = std::make_shared<detail::SystemData>();
  d->rank = static_cast<unsigned>(n);
  d->coxeter = m;
  d->field = &CyclotomicField::of(cyclotomic_level(entries));
  const auto& F = *d->field;

  d->bilinear = std::make_unique<ScalarMatrix>(F, n);
  auto& B = *d->bilinear;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      B(i, j) = i == j ? Scalar::one(F) : Scalar::from_cos(F, m[i][j]);

  d->cartan.assign(n, std::vector<Scalar>(n, Scalar::zero(F)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d->cartan[i][j] = B(i, j) + B(i, j);
      assert(d->cartan[i][j].is_real());
    }

  // s_i(alpha_j) = alpha_j - 2 B(alpha_i, alpha_j) alpha_i
  for (std::size_t i = 0; i < n; ++i) {
    ScalarMatrix s = ScalarMatrix::identity(F, n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= d->cartan[i][j];
    d->simple.push_back(std::move(s));
  }

  // Positive definite iff every pivot of the unpivoted LDL^T elimination is positive.
  ScalarMatrix a = B;
  d->finite = true;
  for (std::size_t k = 0; k < n && d->finite; ++k) {
    if (a(k, k).sign() != Sign::positive) {
      d->finite = false;
      break;
    }
    Scalar inv = a(k, k).inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      Scalar f = a(r, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return CoxeterSystem(std::move(d));
}

inline Element CoxeterSystem::identity() const {
  return Element(*this, ScalarMatrix::identity(field(), rank()));
}

inline Element CoxeterSystem::generator(int s) const {
  if (s < 1 || s > static_cast<int>(rank()))
    throw DomainError("generator index " + std::to_string(s) + " out of range 1.." +
                      std::to_string(rank()));
  return Element(*this, d_->simple[static_cast<std::size_t>(s - 1)]);
}

inline Element CoxeterSystem::element(const Word& word) const {
  Element w = identity();
  for (int s : word) {
    if (s < 1 || s > static_cast<int>(rank()))
      throw DomainError("generator index " + std::to_string(s) + " out of range 1.." +
                        std::to_string(rank()));
    w = w.times_simple(s);
  }
  return w;
}

/// Product of simple reflections in word order.
inline Element element_from_word(const CoxeterSystem& sys, const Word& word) {
  return sys.element(word);
}

/// w s w^{-1}-style conjugation: u t u^{-1}.
inline Element conjugate(const Element& u, const Element& t) { return u * t * u.inverse(); }

/// True iff w is a reflection u s u^{-1}.
///
/// Conjugating a reflection t != s by a left descent s always yields a reflection
/// of length l(t) - 2, so the loop reaches a simple generator exactly when w is
/// a reflection.
inline bool is_reflection(const Element& w) {
  Element cur = w;
  std::size_t len = cur.length();
  while (len > 1) {
    if (len % 2 == 0) return false;
    int s = cur.canonical_word().front();  // smallest left descent
    Element next = cur.simple_times(s).times_simple(s);
    if (next.length() + 2 != len) return false;
    cur = std::move(next);
    len -= 2;
  }
  return len == 1;
}

/// The positive root alpha with w = s_alpha; throws DomainError for non-reflections.
inline Root reflection_root(const Element& t) {
  if (!is_reflection(t)) throw DomainError("reflection_root called on a non-reflection");
  const CoxeterSystem& sys = t.system();
  Element cur = t;
  Element u = sys.identity();
  while (cur.length() > 1) {
    int s = cur.canonical_word().front();
    u = u.times_simple(s);
    cur = cur.simple_times(s).times_simple(s);
  }
  return u.image_of_simple_root(cur.canonical_word().front());
}

/// Elements of length <= max_length, in BFS (length, then discovery) order.
inline std::vector<Element> elements_up_to_length(const CoxeterSystem& sys, std::size_t max_length,
                                                  std::size_t budget = 1'000'000) {
  std::vector<Element> out{sys.identity()};
  ElementSet seen{out.front()};
  std::size_t frontier_begin = 0;
  for (std::size_t len = 0; len < max_length; ++len) {
    std::size_t frontier_end = out.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k)
      for (int s = 1; s <= static_cast<int>(sys.rank()); ++s) {
        if (out[k].has_right_descent(s)) continue;
        Element next = out[k].times_simple(s);
        if (seen.insert(next).second) {
          out.push_back(std::move(next));
          if (out.size() > budget) throw BudgetError("element enumeration exceeded budget");
        }
      }
    if (out.size() == frontier_end) break;
    frontier_begin = frontier_end;
  }
  return out;
}

/// All elements of a finite Coxeter group.
inline std::vector<Element> enumerate_group(const CoxeterSystem& sys,
                                            std::size_t budget = 1'000'000) {
  if (!sys.is_finite()) throw UnsupportedError("cannot enumerate an infinite Coxeter group");
  return elements_up_to_length(sys, static_cast<std::size_t>(-1), budget);
}

/// Longest element of a finite group (maximal length).
inline Element longest_element(const CoxeterSystem& sys) {
  auto all = enumerate_group(sys);
  return all.back();
}

}  // namespace coxhurwitz

template <>
struct std::hash<coxhurwitz::Element> {
  std::size_t operator()(const coxhurwitz::Element& e) const noexcept { return e.hash(); }
};
