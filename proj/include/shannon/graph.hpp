#pragma once

// Immutable simple graphs and the semiring operations on them: disjoint union
// (addition, unit K_0) and strong product (multiplication, unit K_1).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shannon/vertex_set.hpp"

namespace shannon {

using Edge = std::pair<std::size_t, std::size_t>;

class Graph {
 public:
  /// The empty graph K_0.
  Graph() = default;

  /// Validates symmetry and the empty diagonal.
  explicit Graph(std::vector<VertexSet> rows, std::string label = {})
      : rows_(std::move(rows)), label_(std::move(label)) {
    const std::size_t n = rows_.size();
    for (std::size_t u = 0; u < n; ++u) {
      if (rows_[u].capacity() != n)
        throw std::invalid_argument("adjacency row has wrong width");
      if (rows_[u].test(u)) throw std::invalid_argument("graph has a loop");
      rows_[u].for_each([&](std::size_t v) {
        if (!rows_[v].test(u))
          throw std::invalid_argument("adjacency is not symmetric");
      });
      edges_ += rows_[u].count();
    }
    edges_ /= 2;
  }

  static Graph edgeless(std::size_t n, std::string label = {}) {
    return Graph(std::vector<VertexSet>(n, VertexSet(n)), std::move(label));
  }

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::string label = {}) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("graph has a loop");
      rows[u].set(v);
      rows[v].set(u);
    }
    return Graph(std::move(rows), std::move(label));
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return rows_.empty(); }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }

  /// Neighbours plus v itself.
  VertexSet closed_neighbors(std::size_t v) const {
    VertexSet s = rows_[v];
    s.set(v);
    return s;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < order(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Index-exact equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
  std::string label_;
};

inline Graph complete_graph(std::size_t n) {
  std::vector<VertexSet> rows(n, VertexSet::full(n));
  for (std::size_t v = 0; v < n; ++v) rows[v].reset(v);
  return Graph(std::move(rows), "K" + std::to_string(n));
}

inline Graph edgeless_graph(std::size_t n) {
  return Graph::edgeless(n, "K" + std::to_string(n) + "bar");
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges, "petersen");
}

/// Named families: complete, edgeless, cycle, path, petersen (k ignored).
inline Graph make_named(std::string_view family, std::size_t k) {
  if (family == "complete") return complete_graph(k);
  if (family == "edgeless") return edgeless_graph(k);
  if (family == "cycle") return cycle_graph(k);
  if (family == "path") return path_graph(k);
  if (family == "petersen") return petersen_graph();
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    VertexSet r = g.neighbors(v).complemented();
    r.reset(v);
    rows.push_back(std::move(r));
  }
  return Graph(std::move(rows));
}

/// Vertices of h are shifted by |V(g)|; no cross edges.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t n = g.order() + h.order();
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) { rows[u].set(v); });
  const std::size_t off = g.order();
  for (std::size_t u = 0; u < h.order(); ++u)
    h.neighbors(u).for_each([&](std::size_t v) { rows[off + u].set(off + v); });
  return Graph(std::move(rows));
}

/// copies-fold disjoint union of g with itself (K_0 for zero copies).
inline Graph disjoint_copies(const Graph& g, std::size_t copies) {
  Graph out;
  for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

/// Vertex (a, b) is numbered a * |V(h)| + b. Distinct pairs are adjacent iff
/// each coordinate is equal or adjacent.
inline Graph strong_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t a = 0; a < g.order(); ++a) {
    const VertexSet ga = g.closed_neighbors(a);
    for (std::size_t b = 0; b < m; ++b) {
      const VertexSet hb = h.closed_neighbors(b);
      VertexSet& row = rows[a * m + b];
      ga.for_each([&](std::size_t a2) {
        hb.for_each([&](std::size_t b2) { row.set(a2 * m + b2); });
      });
      row.reset(a * m + b);
    }
  }
  return Graph(std::move(rows));
}

/// Left-associated g ⊠ g ⊠ ... ⊠ g with n factors.
inline Graph strong_power(const Graph& g, std::size_t n) {
  if (n == 0) throw std::invalid_argument("strong power exponent must be positive");
  Graph out = g;
  for (std::size_t i = 1; i < n; ++i) out = strong_product(out, g);
  return out.with_label(g.label().empty() ? std::string{}
                                          : g.label() + "^" + std::to_string(n));
}

/// Relabels vertex v as perm[v].
inline Graph permuted(const Graph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t u = 0; u < n; ++u)
    g.neighbors(u).for_each([&](std::size_t v) { rows[perm[u]].set(perm[v]); });
  return Graph(std::move(rows));
}

namespace detail {

inline bool extend_isomorphism(const Graph& a, const Graph& b,
                               const std::vector<std::size_t>& order,
                               std::size_t depth, std::vector<std::size_t>& map,
                               VertexSet& used) {
  if (depth == order.size()) return true;
  const std::size_t u = order[depth];
  for (std::size_t x = 0; x < b.order(); ++x) {
    if (used.test(x) || a.degree(u) != b.degree(x)) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const std::size_t w = order[k];
      ok = a.adjacent(u, w) == b.adjacent(x, map[w]);
    }
    if (!ok) continue;
    map[u] = x;
    used.set(x);
    if (extend_isomorphism(a, b, order, depth + 1, map, used)) return true;
    used.reset(x);
  }
  return false;
}

}  // namespace detail

/// Exhaustive isomorphism search with degree and adjacency pruning. Returns
/// the map V(a) -> V(b). Intended for small graphs in property tests.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a,
                                                                const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> da, db;
  for (std::size_t v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  // BFS-like order so each new vertex has many already-mapped neighbours.
  std::vector<std::size_t> order;
  VertexSet placed(a.order());
  while (order.size() < a.order()) {
    std::size_t best = VertexSet::npos, best_links = 0;
    for (std::size_t v = 0; v < a.order(); ++v) {
      if (placed.test(v)) continue;
      const std::size_t links = (a.neighbors(v) & placed).count();
      if (best == VertexSet::npos || links > best_links ||
          (links == best_links && a.degree(v) > a.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed.set(best);
  }
  std::vector<std::size_t> map(a.order(), 0);
  VertexSet used(b.order());
  if (!detail::extend_isomorphism(a, b, order, 0, map, used)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace shannon
