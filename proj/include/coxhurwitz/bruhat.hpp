#pragma once

// The Bruhat graph: vertices W, edges w -- wt for reflections t, oriented
// towards greater Coxeter length. Only finite balls (or finite groups) are
// materialized.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "errors.hpp"
#include "reflections.hpp"

namespace coxhurwitz {

enum class Direction { up, down };

/// The path x, x t_1, x t_1 t_2, ... attached to a tuple of reflections.
struct BruhatPath {
  Element start;
  std::vector<Element> steps;
  std::vector<Element> vertices;      // steps.size() + 1 entries
  std::vector<std::size_t> lengths;   // Coxeter length of each vertex
  std::vector<Direction> directions;  // up iff the length increases across the edge

  const Element& end() const { return vertices.back(); }
};

inline BruhatPath path_of_factorization(const Element& x, std::span<const Element> steps) {
  BruhatPath p{x, {steps.begin(), steps.end()}, {x}, {x.length()}, {}};
  for (const auto& t : steps) {
    if (!(t.system() == x.system())) throw ContractError("path step from a different Coxeter system");
    if (!is_reflection(t)) throw DomainError("path step is not a reflection");
    p.vertices.push_back(p.vertices.back() * t);
    p.lengths.push_back(p.vertices.back().length());
    const std::size_t a = p.lengths[p.lengths.size() - 2], b = p.lengths.back();
    if (a == b) throw InternalError("Bruhat edge between elements of equal length");
    p.directions.push_back(a < b ? Direction::up : Direction::down);
  }
  return p;
}

/// Valley shape: down^i up^(n-i). `pivot` is i, absent when the path is not a valley.
struct PathShape {
  std::optional<std::size_t> pivot;
  bool is_valley() const noexcept { return pivot.has_value(); }
};

inline PathShape classify_shape(std::span<const Direction> pattern) {
  std::size_t i = 0;
  while (i < pattern.size() && pattern[i] == Direction::down) ++i;
  for (std::size_t j = i; j < pattern.size(); ++j)
    if (pattern[j] == Direction::down) return {};
  return {i};
}

inline PathShape classify_shape(const BruhatPath& p) { return classify_shape(p.directions); }

inline Element product_of(const CoxeterSystem& sys, std::span<const Element> f) {
  Element w = sys.identity();
  for (const auto& t : f) w = w * t;
  return w;
}

/// True iff l_T(t_1 ... t_n) = n. An empty tuple is reduced.
inline bool is_reduced_factorization(std::span<const Element> f,
                                     std::size_t budget = default_word_length_budget) {
  if (f.empty()) return true;
  return reflection_length(product_of(f.front().system(), f), std::nullopt, budget) == f.size();
}

inline std::string word_key(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k]);
  }
  return s;
}

/// A finite directed graph on group elements. Vertices are ShortLex-sorted and
/// keyed by canonical word; edges run from the shorter to the longer element.
class BruhatGraph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  BruhatGraph(std::vector<Element> vertices, const std::vector<std::pair<Element, Element>>& edges)
      : vertices_(std::move(vertices)) {
    sort_shortlex(vertices_);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      by_element_.emplace(vertices_[k], k);
      by_key_.emplace(word_key(vertices_[k].canonical_word()), k);
    }
    for (const auto& [a, b] : edges) edges_.emplace_back(index_of(a).value(), index_of(b).value());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const std::vector<Element>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> index_of(const Element& w) const {
    auto it = by_element_.find(w);
    if (it == by_element_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> index_of(const std::string& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t out_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.first == v; }));
  }

  /// Edges as element pairs; identity-on-elements comparisons use this.
  std::vector<std::pair<Element, Element>> edge_elements() const {
    std::vector<std::pair<Element, Element>> out;
    for (const auto& [a, b] : edges_) out.emplace_back(vertices_[a], vertices_[b]);
    return out;
  }

  /// Distances from `source` ignoring orientation; unreachable vertices are absent.
  std::vector<std::optional<std::size_t>> undirected_distances(std::size_t source) const {
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& [a, b] : edges_) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<std::optional<std::size_t>> dist(vertices_.size());
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : adj[v])
        if (!dist[u]) {
          dist[u] = *dist[v] + 1;
          queue.push_back(u);
        }
    }
    return dist;
  }

private:
  std::vector<Element> vertices_;
  std::vector<Edge> edges_;
  ElementMap<std::size_t> by_element_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

/// Omega_dir restricted to the ball l(w) <= radius.
inline BruhatGraph directed_ball(const CoxeterSystem& sys, std::size_t radius,
                                 const ReflectionSet* reflections = nullptr) {
  std::optional<ReflectionSet> own;
  if (!reflections) {
    own = sys.is_finite() ? enumerate_reflections(sys) : enumerate_reflections(sys, 2 * radius);
    reflections = &*own;
  }
  if (reflections->completeness() == ReflectionSet::Completeness::depth_bounded &&
      reflections->depth() < 2 * radius)
    throw BudgetError("reflection set does not reach length " + std::to_string(2 * radius));

  std::vector<Element> verts = elements_up_to_length(sys, radius);
  ElementSet in_ball(verts.begin(), verts.end());
  std::vector<std::pair<Element, Element>> edges;
  for (const auto& w : verts)
    for (const auto& t : *reflections) {
      Element wt = w * t;
      if (in_ball.contains(wt) && w.length() < wt.length()) edges.emplace_back(w, wt);
    }
  return BruhatGraph(std::move(verts), edges);
}

/// Induced subgraph on the elements of W'.
inline BruhatGraph restrict_to_subgroup(const BruhatGraph& g, const ReflectionSubgroup& sub) {
  if (!sub.complete) throw UnsupportedError("restriction needs a fully enumerated subgroup");
  for (const auto& w : sub.elements)
    if (!g.index_of(w)) throw ContractError("graph does not cover the subgroup");
  std::vector<std::pair<Element, Element>> edges;
  for (const auto& [a, b] : g.edge_elements())
    if (sub.contains(a) && sub.contains(b)) edges.emplace_back(a, b);
  return BruhatGraph(sub.elements, edges);
}

/// Directed Bruhat graph of W' computed intrinsically: lengths are word lengths
/// in the canonical simple system S' and the reflections are the W'-conjugates
/// of S'. Nothing here consults the ambient length function.
inline BruhatGraph intrinsic_subgroup_graph(const ReflectionSubgroup& sub) {
  if (!sub.complete) throw UnsupportedError("intrinsic graph needs a fully enumerated subgroup");
  const auto& simples = sub.canonical_simples;
  const Element e = sub.elements.front().system().identity();
  ElementMap<std::size_t> len{{e, 0}};
  std::deque<Element> queue{e};
  while (!queue.empty()) {
    Element w = queue.front();
    queue.pop_front();
    for (const auto& s : simples) {
      Element ws = w * s;
      if (len.emplace(ws, len.at(w) + 1).second) queue.push_back(ws);
    }
  }
  if (len.size() != sub.elements.size())
    throw InternalError("canonical simple system does not generate the subgroup");
  ElementSet refl;
  for (const auto& u : sub.elements)
    for (const auto& s : simples) refl.insert(u * s * u.inverse());
  std::vector<std::pair<Element, Element>> edges;
  for (const auto& w : sub.elements)
    for (const auto& t : refl) {
      Element wt = w * t;
      if (len.at(w) < len.at(wt)) edges.emplace_back(w, wt);
    }
  return BruhatGraph(sub.elements, edges);
}

/// Graphviz digraph; vertex labels are canonical words, edges point up in length.
inline void write_dot(std::ostream& os, const BruhatGraph& g) {
  os << "digraph bruhat {\n";
  for (std::size_t k = 0; k < g.vertices().size(); ++k)
    os << "  n" << k << " [label=\"" << word_key(g.vertices()[k].canonical_word()) << "\"];\n";
  for (const auto& [a, b] : g.edges()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
}

}  // namespace coxhurwitz
