#pragma once

#include <cstddef>
#include <vector>

#include "shannon/graph.hpp"

namespace shannon::testing {

// Every labelled graph on n vertices, enumerated by edge mask.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

// Brute-force α: largest independent subset by enumeration (n <= 20).
inline std::size_t brute_alpha(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

// Brute-force χ̄: smallest k such that some assignment of k labels makes every
// label class a clique (plain backtracking over labels, no bounds).
inline bool brute_cover_with(const Graph& g, std::size_t k, std::size_t v,
                             std::vector<std::size_t>& label) {
  if (v == g.order()) return true;
  for (std::size_t c = 0; c < k; ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u)
      if (label[u] == c && !g.adjacent(u, v)) ok = false;
    if (!ok) continue;
    label[v] = c;
    if (brute_cover_with(g, k, v + 1, label)) return true;
  }
  return false;
}

inline std::size_t brute_clique_cover(const Graph& g) {
  for (std::size_t k = 0;; ++k) {
    std::vector<std::size_t> label(g.order());
    if (brute_cover_with(g, k, 0, label)) return k;
  }
}

}  // namespace shannon::testing
