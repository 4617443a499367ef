#include <gtest/gtest.h>

#include "shannon/exact_params.hpp"
#include "shannon/preorder.hpp"
#include "shannon/prng.hpp"
#include "test_util.hpp"

namespace shannon {
namespace {

TEST(CohomLeq, EdgelessGraphsOrderLikeNaturals) {
  EXPECT_EQ(cohom_leq(edgeless_graph(2), edgeless_graph(3)).status, CohomStatus::True);
  EXPECT_EQ(cohom_leq(edgeless_graph(3), edgeless_graph(2)).status, CohomStatus::False);
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t m = 0; m <= 5; ++m)
      EXPECT_EQ(cohom_leq(edgeless_graph(n), edgeless_graph(m)).status == CohomStatus::True,
                n <= m);
}

TEST(CohomLeq, ReflexiveWithIdentity) {
  SplitMix64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(rng, 8, 0);
    const CohomResult r = cohom_leq(g, g);
    ASSERT_EQ(r.status, CohomStatus::True);
    EXPECT_EQ(*r.certificate, identity_certificate(g.order()));
  }
}

TEST(CohomLeq, PentagonBelowThreeIsolatedVertices) {
  // χ̄(C5) = 3 and G <= K̄_r iff χ̄(G) <= r.
  ASSERT_EQ(testing::brute_clique_cover(cycle_graph(5)), 3u);
  const CohomResult r = cohom_leq(cycle_graph(5), edgeless_graph(3));
  ASSERT_EQ(r.status, CohomStatus::True);
  EXPECT_TRUE(verify_certificate(cycle_graph(5), edgeless_graph(3), *r.certificate));
  EXPECT_EQ(cohom_leq(cycle_graph(5), edgeless_graph(2)).status, CohomStatus::False);
}

// G <= K̄_r iff χ̄(G) <= r, and K̄_s <= G iff α(G) >= s.
TEST(CohomLeq, AgreesWithRankAndSubrank) {
  SplitMix64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(rng, 7);
    const std::size_t cover = testing::brute_clique_cover(g);
    const std::size_t alpha = testing::brute_alpha(g);
    for (std::size_t r = 0; r <= g.order(); ++r) {
      EXPECT_EQ(cohom_leq(g, edgeless_graph(r)).status == CohomStatus::True, cover <= r);
      EXPECT_EQ(cohom_leq(edgeless_graph(r), g).status == CohomStatus::True, alpha >= r);
    }
  }
}

TEST(CohomLeq, BudgetExceededIsDistinct) {
  const CohomResult r = cohom_leq(edgeless_graph(9), strong_power(cycle_graph(5), 2), 3);
  EXPECT_EQ(r.status, CohomStatus::BudgetExceeded);
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_THROW(cohom_leq(edgeless_graph(1), edgeless_graph(1), 0), std::invalid_argument);
  EXPECT_EQ(cohom_leq(edgeless_graph(9), strong_power(cycle_graph(5), 2)).status,
            CohomStatus::False);
}

TEST(CohomLeq, EmptyGraphs) {
  EXPECT_EQ(cohom_leq(Graph{}, Graph{}).status, CohomStatus::True);
  EXPECT_EQ(cohom_leq(Graph{}, cycle_graph(4)).status, CohomStatus::True);
  EXPECT_EQ(cohom_leq(complete_graph(1), Graph{}).status, CohomStatus::False);
}

TEST(Certificates, VerifierRejectsBadMaps) {
  const Graph c5 = cycle_graph(5);
  EXPECT_FALSE(verify_certificate(c5, edgeless_graph(3), {0, 0, 0, 0, 0}));
  EXPECT_FALSE(verify_certificate(c5, edgeless_graph(3), {0, 1, 2}));
  EXPECT_FALSE(verify_certificate(c5, edgeless_graph(3), {0, 1, 2, 3, 4}));
  EXPECT_TRUE(verify_certificate(c5, edgeless_graph(3), {0, 0, 1, 1, 2}));
}

TEST(Certificates, TransitivityByComposition) {
  SplitMix64 rng(23);
  int composed = 0;
  for (int i = 0; i < 200 && composed < 30; ++i) {
    const Graph a = random_graph(rng, 4), b = random_graph(rng, 5), c = random_graph(rng, 6);
    const CohomResult ab = cohom_leq(a, b), bc = cohom_leq(b, c);
    if (ab.status != CohomStatus::True || bc.status != CohomStatus::True) continue;
    ++composed;
    const HomCertificate ac = compose_certificates(*ab.certificate, *bc.certificate);
    EXPECT_TRUE(verify_certificate(a, c, ac));
    EXPECT_EQ(cohom_leq(a, c).status, CohomStatus::True);
  }
  EXPECT_GE(composed, 10);
}

TEST(Certificates, CompatibleWithUnionAndProduct) {
  SplitMix64 rng(31);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 25; ++i) {
    const Graph a = random_graph(rng, 4), b = random_graph(rng, 4);
    const Graph c = random_graph(rng, 4), d = random_graph(rng, 4);
    const CohomResult ab = cohom_leq(a, b), cd = cohom_leq(c, d);
    if (ab.status != CohomStatus::True || cd.status != CohomStatus::True) continue;
    ++checked;
    EXPECT_TRUE(verify_certificate(disjoint_union(a, c), disjoint_union(b, d),
                                   union_certificate(*ab.certificate, b.order(), *cd.certificate)));
    EXPECT_TRUE(verify_certificate(strong_product(a, c), strong_product(b, d),
                                   product_certificate(*ab.certificate, *cd.certificate, d.order())));
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace shannon
