#pragma once

// Fractional clique cover number as an exact LP over maximal cliques, and the
// generic fractionalizer  φ_f(G) = inf_d φ(complement(complement(G) ⊠ K_d)) / d.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/graph.hpp"
#include "shannon/rational.hpp"
#include "shannon/simplex.hpp"

namespace shannon {

inline constexpr std::size_t kDefaultCliqueLimit = 20;

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P ∪ X with the most neighbours in P.
  std::size_t pivot = VertexSet::npos, most = 0;
  (p | x).for_each([&](std::size_t u) {
    const std::size_t k = (p & g.neighbors(u)).count();
    if (pivot == VertexSet::npos || k > most) {
      pivot = u;
      most = k;
    }
  });
  VertexSet branch = p;
  branch.subtract(g.neighbors(pivot));
  branch.for_each([&](std::size_t v) {
    r.set(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace detail

/// Inclusion-maximal cliques, sorted lexicographically by vertex list.
inline std::vector<VertexSet> maximal_cliques(const Graph& g,
                                              std::size_t limit = kDefaultCliqueLimit) {
  if (g.order() > limit)
    throw LimitError("maximal cliques: " + std::to_string(g.order()) +
                     " vertices exceeds limit " + std::to_string(limit));
  std::vector<VertexSet> out;
  if (g.empty()) return out;
  VertexSet r(g.order());
  detail::bron_kerbosch(g, r, VertexSet::full(g.order()), VertexSet(g.order()), out);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return lex_less(a, b);
  });
  return out;
}

/// minimize Σ w_Q  subject to  Σ_{Q ∋ v} w_Q >= 1 for every vertex,  w >= 0.
struct CoverLP {
  std::size_t vertex_count = 0;
  std::vector<VertexSet> columns;
};

struct CoverSolution {
  Rational optimum;
  std::vector<Rational> weights;  // one per column
};

inline CoverLP make_cover_lp(const Graph& g, std::size_t limit = kDefaultCliqueLimit) {
  return CoverLP{g.order(), maximal_cliques(g, limit)};
}

/// Solved through its packing dual with Bland's rule; the returned weights are
/// exactly feasible and sum to the optimum.
inline CoverSolution lp_solve_cover(const CoverLP& lp) {
  VertexSet covered(lp.vertex_count);
  for (const auto& col : lp.columns) {
    if (col.capacity() != lp.vertex_count)
      throw std::invalid_argument("cover LP column has wrong width");
    covered |= col;
  }
  if (covered.count() != lp.vertex_count)
    throw std::invalid_argument("cover LP is infeasible: vertex " +
                                std::to_string(covered.complemented().first()) +
                                " is in no column");

  std::vector<std::vector<Rational>> a(lp.columns.size(),
                                       std::vector<Rational>(lp.vertex_count));
  for (std::size_t q = 0; q < lp.columns.size(); ++q)
    lp.columns[q].for_each([&](std::size_t v) { a[q][v] = 1; });
  const std::vector<Rational> b(lp.columns.size(), Rational(1));
  const std::vector<Rational> c(lp.vertex_count, Rational(1));
  PackingSolution packing = solve_packing_lp(a, b, c);

  CoverSolution sol{packing.optimum, std::move(packing.dual)};
  Rational total = 0;
  std::vector<Rational> coverage(lp.vertex_count);
  for (std::size_t q = 0; q < lp.columns.size(); ++q) {
    if (sgn(sol.weights[q]) < 0) throw std::logic_error("cover LP: negative weight");
    total += sol.weights[q];
    lp.columns[q].for_each([&](std::size_t v) { coverage[v] += sol.weights[q]; });
  }
  for (const auto& cv : coverage)
    if (cv < 1) throw std::logic_error("cover LP: vertex under-covered");
  if (total != sol.optimum) throw std::logic_error("cover LP: objective mismatch");
  return sol;
}

/// χ̄_f(g); 0 for K_0.
inline Rational fractional_clique_cover(const Graph& g,
                                        std::size_t limit = kDefaultCliqueLimit) {
  if (g.empty()) return 0;
  return lp_solve_cover(make_cover_lp(g, limit)).optimum;
}

struct FractionalValue {
  Rational value;  // upper bound on the infimum over all d
  std::size_t best_d = 1;
};

/// complement(complement(g) ⊠ K_d): each vertex becomes an independent set of
/// d copies, copies of adjacent vertices stay adjacent.
inline Graph fractional_blowup(const Graph& g, std::size_t d) {
  return complement(strong_product(complement(g), complete_graph(d)));
}

/// min over d = 1..d_max of phi(fractional_blowup(g, d)) / d, smallest d on
/// ties. phi maps a Graph to a Rational.
template <typename Evaluator>
FractionalValue fractionalize(Evaluator&& phi, const Graph& g, std::size_t d_max) {
  if (d_max == 0) throw std::invalid_argument("d_max must be positive");
  FractionalValue best;
  for (std::size_t d = 1; d <= d_max; ++d) {
    Rational v;
    try {
      v = Rational(phi(fractional_blowup(g, d))) / Rational(static_cast<unsigned long>(d));
    } catch (const LimitError& e) {
      throw LimitError(std::string(e.what()) + " (at d = " + std::to_string(d) + ")");
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string(e.what()) + " (at d = " + std::to_string(d) + ")");
    }
    if (d == 1 || v < best.value) {
      best.value = v;
      best.best_d = d;
    }
  }
  return best;
}

}  // namespace shannon
