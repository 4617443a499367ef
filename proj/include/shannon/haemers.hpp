#pragma once

// Haemers bound over a prime field:  R^F(G) = min rank(M) over matrices M
// with M_vv != 0 and M_uv = 0 whenever u != v are non-adjacent.
//
// rank <= r iff there are column vectors g_v in F^r with g_v outside the span
// of { g_u : u non-adjacent to v } (then pick c_v with c_v·g_v = 1 and
// c_v·g_u = 0 on non-neighbours; M = C Gᵀ). The r x n matrix with columns g_v
// is enumerated in reduced row echelon form, column by column: each column is
// either the next pivot e_k or a vector in the span of the earlier pivots.
// Spans of assigned non-neighbours only grow, so a violated vertex prunes the
// whole subtree.

#include <cstdint>
#include <string>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/exact_params.hpp"
#include "shannon/fractional.hpp"
#include "shannon/graph.hpp"
#include "shannon/rational.hpp"

namespace shannon {

inline constexpr std::size_t kHaemersMaxOrder = 10;

using ModMatrix = std::vector<std::vector<unsigned>>;

inline bool is_supported_prime(unsigned p) { return p == 2 || p == 3 || p == 5 || p == 7; }

inline unsigned mod_inverse(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::invalid_argument("no inverse modulo p");
}

/// Rank over GF(p) by Gaussian elimination.
inline std::size_t rank_mod_p(ModMatrix m, unsigned p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const unsigned inv = mod_inverse(m[rank][c] % p, p);
    for (auto& x : m[rank]) x = (x * inv) % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const unsigned f = m[r][c] % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + p * p - f * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

/// The constraint set M^F(G) over GF(p).
struct FieldPattern {
  Graph graph;
  unsigned p = 2;

  bool contains(const ModMatrix& m) const {
    const std::size_t n = graph.order();
    if (m.size() != n) return false;
    for (std::size_t u = 0; u < n; ++u) {
      if (m[u].size() != n) return false;
      for (std::size_t v = 0; v < n; ++v) {
        if (m[u][v] >= p) return false;
        if (u == v && m[u][v] == 0) return false;
        if (u != v && !graph.adjacent(u, v) && m[u][v] != 0) return false;
      }
    }
    return true;
  }
};

struct HaemersResult {
  std::size_t rank = 0;
  ModMatrix witness;  // in M^F(G), rank over GF(p) equals `rank`
};

/// Row-major digit strings, one per row.
inline std::vector<std::string> witness_rows(const ModMatrix& m) {
  std::vector<std::string> out;
  for (const auto& row : m) {
    std::string s;
    for (auto x : row) s.push_back(static_cast<char>('0' + x));
    out.push_back(std::move(s));
  }
  return out;
}

namespace detail {

// Subspace of F^r kept as an echelon basis with unit pivots.
class ModSpan {
 public:
  ModSpan() = default;
  ModSpan(std::size_t r, unsigned p) : r_(r), p_(p) {}

  std::vector<unsigned> reduce(std::vector<unsigned> v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const unsigned f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < r_; ++k) v[k] = (v[k] + p_ * p_ - f * basis_[i][k]) % p_;
    }
    return v;
  }
  bool contains(const std::vector<unsigned>& v) const {
    const auto red = reduce(v);
    for (auto x : red)
      if (x != 0) return false;
    return true;
  }
  void add(const std::vector<unsigned>& v) {
    auto red = reduce(v);
    std::size_t piv = 0;
    while (piv < r_ && red[piv] == 0) ++piv;
    if (piv == r_) return;
    const unsigned inv = mod_inverse(red[piv], p_);
    for (auto& x : red) x = (x * inv) % p_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const unsigned f = basis_[i][piv];
      if (f == 0) continue;
      for (std::size_t k = 0; k < r_; ++k)
        basis_[i][k] = (basis_[i][k] + p_ * p_ - f * red[k]) % p_;
    }
    basis_.push_back(std::move(red));
    pivots_.push_back(piv);
  }

 private:
  std::size_t r_ = 0;
  unsigned p_ = 2;
  std::vector<std::vector<unsigned>> basis_;
  std::vector<std::size_t> pivots_;
};

class HaemersSearch {
 public:
  HaemersSearch(const Graph& g, unsigned p, std::size_t r)
      : g_(g), n_(g.order()), p_(p), r_(r), columns_(n_) {}

  bool run() {
    std::vector<ModSpan> spans(n_, ModSpan(r_, p_));
    return place(0, 0, spans);
  }
  const std::vector<std::vector<unsigned>>& columns() const { return columns_; }

 private:
  bool place(std::size_t v, std::size_t pivots, const std::vector<ModSpan>& spans) {
    if (v == n_) return pivots == r_;
    const std::size_t left_after = n_ - v - 1;

    // Non-pivot columns: nonzero vectors supported on the first `pivots`
    // coordinates whose first nonzero entry is 1.
    if (pivots > 0 && left_after >= r_ - pivots) {
      std::vector<unsigned> c(r_, 0);
      std::size_t total = 1;
      for (std::size_t i = 0; i < pivots; ++i) total *= p_;
      for (std::size_t code = 1; code < total; ++code) {
        std::size_t x = code;
        std::size_t first = r_;
        for (std::size_t i = pivots; i-- > 0;) {
          c[i] = static_cast<unsigned>(x % p_);
          x /= p_;
          if (c[i] != 0) first = i;
        }
        if (c[first] != 1) continue;
        if (try_column(v, pivots, c, spans)) return true;
      }
    }
    if (pivots < r_ && left_after >= r_ - pivots - 1) {
      std::vector<unsigned> c(r_, 0);
      c[pivots] = 1;
      if (try_column(v, pivots + 1, c, spans)) return true;
    }
    return false;
  }

  bool try_column(std::size_t v, std::size_t pivots, const std::vector<unsigned>& c,
                  const std::vector<ModSpan>& spans) {
    if (spans[v].contains(c)) return false;
    std::vector<ModSpan> next = spans;
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == v || g_.adjacent(v, w)) continue;
      next[w].add(c);
      if (w < v && next[w].contains(columns_[w])) return false;
    }
    columns_[v] = c;
    return place(v + 1, pivots, next);
  }

  const Graph& g_;
  std::size_t n_;
  unsigned p_;
  std::size_t r_;
  std::vector<std::vector<unsigned>> columns_;
};

// Solves c·g_u = 0 for non-neighbours u and c·g_v = 1.
inline std::vector<unsigned> dual_row(const Graph& g, std::size_t v,
                                      const std::vector<std::vector<unsigned>>& cols,
                                      std::size_t r, unsigned p) {
  ModMatrix aug;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (u != v && g.adjacent(u, v)) continue;
    std::vector<unsigned> row(cols[u]);
    row.push_back(u == v ? 1 : 0);
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < r && rank < aug.size(); ++c) {
    std::size_t piv = rank;
    while (piv < aug.size() && aug[piv][c] == 0) ++piv;
    if (piv == aug.size()) continue;
    std::swap(aug[piv], aug[rank]);
    const unsigned inv = mod_inverse(aug[rank][c], p);
    for (auto& x : aug[rank]) x = (x * inv) % p;
    for (std::size_t i = 0; i < aug.size(); ++i) {
      if (i == rank || aug[i][c] == 0) continue;
      const unsigned f = aug[i][c];
      for (std::size_t k = 0; k <= r; ++k) aug[i][k] = (aug[i][k] + p * p - f * aug[rank][k]) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < aug.size(); ++i)
    if (aug[i][r] != 0) throw std::logic_error("haemers: inconsistent dual system");
  std::vector<unsigned> c(r, 0);
  for (std::size_t i = 0; i < rank; ++i) c[pivot_col[i]] = aug[i][r];
  return c;
}

inline ModMatrix clique_cover_witness(const Graph& g, const CliqueCover& cover) {
  ModMatrix m(g.order(), std::vector<unsigned>(g.order(), 0));
  for (const auto& q : cover.cliques)
    for (auto u : q)
      for (auto v : q) m[u][v] = 1;
  return m;
}

}  // namespace detail

/// Exact minimum rank over M^F(G) for F = GF(p), with a witness matrix.
inline HaemersResult haemers_rank(const Graph& g, unsigned p) {
  if (!is_supported_prime(p))
    throw LimitError("haemers: field GF(" + std::to_string(p) +
                     ") unsupported; p must be 2, 3, 5 or 7");
  if (g.order() > kHaemersMaxOrder)
    throw LimitError("haemers: " + std::to_string(g.order()) + " vertices exceeds limit " +
                     std::to_string(kHaemersMaxOrder));
  HaemersResult result;
  if (g.empty()) return result;

  // An independent set gives a diagonal principal submatrix, so rank >= α;
  // the block matrix of a clique cover is feasible, so rank <= χ̄.
  const std::size_t lower = independence_number(g).size;
  const CliqueCover cover = clique_cover_number(g);

  const FieldPattern pattern{g, p};
  for (std::size_t r = lower; r < cover.size; ++r) {
    detail::HaemersSearch search(g, p, r);
    if (!search.run()) continue;
    const auto& cols = search.columns();
    std::vector<std::vector<unsigned>> dual(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) dual[v] = detail::dual_row(g, v, cols, r, p);
    ModMatrix m(g.order(), std::vector<unsigned>(g.order(), 0));
    for (std::size_t v = 0; v < g.order(); ++v)
      for (std::size_t u = 0; u < g.order(); ++u) {
        unsigned s = 0;
        for (std::size_t k = 0; k < r; ++k) s = (s + dual[v][k] * cols[u][k]) % p;
        m[v][u] = s;
      }
    if (!pattern.contains(m) || rank_mod_p(m, p) != r)
      throw std::logic_error("haemers: witness failed verification");
    result.rank = r;
    result.witness = std::move(m);
    return result;
  }
  result.rank = cover.size;
  result.witness = detail::clique_cover_witness(g, cover);
  if (!pattern.contains(result.witness) || rank_mod_p(result.witness, p) != result.rank)
    throw std::logic_error("haemers: clique cover witness failed verification");
  return result;
}

/// min over d <= d_max of haemers_rank(blow-up by d) / d.
inline FractionalValue fractional_haemers(const Graph& g, unsigned p, std::size_t d_max) {
  if (d_max == 0) throw std::invalid_argument("d_max must be positive");
  if (g.order() * d_max > kHaemersMaxOrder)
    throw LimitError("fractional haemers: |V| * d_max = " + std::to_string(g.order() * d_max) +
                     " exceeds limit " + std::to_string(kHaemersMaxOrder));
  if (!is_supported_prime(p))
    throw LimitError("haemers: field GF(" + std::to_string(p) + ") unsupported");
  return fractionalize(
      [p](const Graph& blown) {
        return Rational(static_cast<unsigned long>(haemers_rank(blown, p).rank));
      },
      g, d_max);
}

}  // namespace shannon
