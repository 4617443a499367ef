#include <gtest/gtest.h>

#include <algorithm>

#include "shannon/exact_params.hpp"
#include "shannon/fractional.hpp"
#include "shannon/preorder.hpp"
#include "shannon/prng.hpp"
#include "test_util.hpp"

namespace shannon {
namespace {

// Maximal cliques by checking every vertex subset.
std::vector<std::vector<std::size_t>> brute_maximal_cliques(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cliques;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto m : cliques) {
    const bool maximal = std::none_of(cliques.begin(), cliques.end(), [&](std::size_t o) {
      return o != m && (o & m) == m;
    });
    if (!maximal) continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (m >> v & 1) vs.push_back(v);
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Solves a square system exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Cover LP optimum by enumerating every basic solution: choose k tight
// constraints out of the n covering rows and k nonnegativity rows.
Rational brute_cover_lp(std::size_t n, const std::vector<std::vector<std::size_t>>& cols) {
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> r(k);
    for (std::size_t q = 0; q < k; ++q)
      if (std::find(cols[q].begin(), cols[q].end(), v) != cols[q].end()) r[q] = 1;
    rows.push_back(r);
    rhs.push_back(1);
  }
  for (std::size_t q = 0; q < k; ++q) {
    std::vector<Rational> r(k);
    r[q] = 1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(k);
  std::vector<bool> sel(rows.size(), false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (sel[i]) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
    auto w = solve_exact(a, b);
    if (!w) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < rows.size() && feasible; ++i) {
      Rational s = 0;
      for (std::size_t q = 0; q < k; ++q) s += rows[i][q] * (*w)[q];
      feasible = s >= rhs[i];
    }
    if (!feasible) continue;
    Rational obj = 0;
    for (auto& x : *w) obj += x;
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return *best;
}

std::vector<std::vector<std::size_t>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

TEST(MaximalCliques, Cases) {
  const auto c5 = maximal_cliques(cycle_graph(5));
  ASSERT_EQ(c5.size(), 5u);
  for (const auto& q : c5) EXPECT_EQ(q.count(), 2u);
  const auto k4 = maximal_cliques(complete_graph(4));
  ASSERT_EQ(k4.size(), 1u);
  EXPECT_EQ(k4[0].count(), 4u);
  const auto e4 = maximal_cliques(edgeless_graph(4));
  ASSERT_EQ(e4.size(), 4u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(e4[v].elements(), std::vector<std::size_t>{v});
  EXPECT_THROW(maximal_cliques(edgeless_graph(21)), LimitError);
}

TEST(MaximalCliques, MatchBruteForceInLexOrder) {
  SplitMix64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 10);
    EXPECT_EQ(as_lists(maximal_cliques(g)), brute_maximal_cliques(g));
  }
}

TEST(CoverLP, Cases) {
  EXPECT_EQ(lp_solve_cover(make_cover_lp(edgeless_graph(2))).optimum, Rational(2));
  EXPECT_EQ(lp_solve_cover(make_cover_lp(complete_graph(3))).optimum, Rational(1));
  const CoverSolution c5 = lp_solve_cover(make_cover_lp(cycle_graph(5)));
  EXPECT_EQ(c5.optimum, Rational(5, 2));
  EXPECT_EQ(brute_cover_lp(5, as_lists(maximal_cliques(cycle_graph(5)))), Rational(5, 2));
  for (const auto& w : c5.weights) EXPECT_EQ(w, Rational(1, 2));
}

TEST(CoverLP, InfeasibleInput) {
  CoverLP lp{3, {}};
  VertexSet q(3);
  q.set(0);
  q.set(1);
  lp.columns.push_back(q);
  EXPECT_THROW(lp_solve_cover(lp), std::invalid_argument);
}

TEST(CoverLP, MatchesVertexEnumeration) {
  SplitMix64 rng(67);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(rng, 6);
    const auto cols = maximal_cliques(g);
    if (cols.size() > 8) continue;
    const CoverSolution s = lp_solve_cover(CoverLP{g.order(), cols});
    EXPECT_EQ(s.optimum, brute_cover_lp(g.order(), as_lists(cols)));
    Rational total = 0;
    for (const auto& w : s.weights) {
      EXPECT_GE(w, 0);
      total += w;
    }
    EXPECT_EQ(total, s.optimum);
  }
}

TEST(FractionalCliqueCover, Cases) {
  EXPECT_EQ(fractional_clique_cover(cycle_graph(5)), Rational(5, 2));
  EXPECT_EQ(fractional_clique_cover(cycle_graph(7)), Rational(7, 2));
  EXPECT_EQ(brute_cover_lp(7, as_lists(maximal_cliques(cycle_graph(7)))), Rational(7, 2));
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(fractional_clique_cover(complete_graph(n)), Rational(1));
    EXPECT_EQ(fractional_clique_cover(edgeless_graph(n)), Rational(static_cast<long>(n)));
  }
  EXPECT_EQ(fractional_clique_cover(Graph{}), Rational(0));
  EXPECT_EQ(fractional_clique_cover(petersen_graph()), Rational(5));
}

// Exact spectrum axioms for χ̄_f on random pairs with n <= 6.
TEST(FractionalCliqueCover, SpectrumAxiomsExact) {
  SplitMix64 rng(71);
  EXPECT_EQ(fractional_clique_cover(complete_graph(1)), Rational(1));
  for (int i = 0; i < 25; ++i) {
    const Graph g = random_graph(rng, 6), h = random_graph(rng, 6);
    const Rational fg = fractional_clique_cover(g), fh = fractional_clique_cover(h);
    EXPECT_EQ(fractional_clique_cover(disjoint_union(g, h), 36), fg + fh);
    EXPECT_EQ(fractional_clique_cover(strong_product(g, h), 36), fg * fh);
    if (cohom_leq(g, h).status == CohomStatus::True) EXPECT_LE(fg, fh);
    EXPECT_LE(Rational(static_cast<long>(independence_number(g).size)), fg);
    EXPECT_LE(fg, Rational(static_cast<long>(clique_cover_number(g).size)));
  }
}

Rational chi_bar(const Graph& g) {
  return Rational(static_cast<long>(clique_cover_number(g).size));
}

TEST(Fractionalize, Cases) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const FractionalValue k1 = fractionalize(chi_bar, complete_graph(1), d);
    EXPECT_EQ(k1.value, Rational(1));
    EXPECT_EQ(k1.best_d, 1u);
  }
  const FractionalValue c5_1 = fractionalize(chi_bar, cycle_graph(5), 1);
  EXPECT_EQ(c5_1.value, Rational(3));
  EXPECT_EQ(c5_1.best_d, 1u);

  ASSERT_EQ(testing::brute_clique_cover(fractional_blowup(cycle_graph(5), 2)), 5u);
  const FractionalValue c5_2 = fractionalize(chi_bar, cycle_graph(5), 2);
  EXPECT_EQ(c5_2.value, Rational(5, 2));
  EXPECT_EQ(c5_2.best_d, 2u);
  EXPECT_EQ(c5_2.value, fractional_clique_cover(cycle_graph(5)));
}

TEST(Fractionalize, FirstTermIsPhiAndSweepIsNonincreasing) {
  SplitMix64 rng(73);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(rng, 4);
    EXPECT_EQ(fractional_blowup(g, 1), g);
    Rational prev = fractionalize(chi_bar, g, 1).value;
    EXPECT_EQ(prev, chi_bar(g));
    for (std::size_t d = 2; d <= 4; ++d) {
      const Rational cur = fractionalize(chi_bar, g, d).value;
      EXPECT_LE(cur, prev);
      EXPECT_GE(cur, fractional_clique_cover(g));
      prev = cur;
    }
  }
}

TEST(Fractionalize, ErrorsCarryTheOffendingD) {
  auto failing = [](const Graph& g) -> Rational {
    if (g.order() > 10) throw LimitError("too big");
    return 1;
  };
  try {
    fractionalize(failing, cycle_graph(5), 3);
    FAIL() << "expected LimitError";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("d = 3"), std::string::npos);
  }
  EXPECT_THROW(fractionalize(failing, cycle_graph(5), 0), std::invalid_argument);
}

}  // namespace
}  // namespace shannon
