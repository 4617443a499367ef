#pragma once

// The cohomomorphism preorder: G <= H iff there is a graph homomorphism from
// complement(G) to complement(H). Equivalently a map f : V(G) -> V(H) sending
// every pair of distinct non-adjacent vertices to distinct non-adjacent
// vertices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shannon/graph.hpp"

namespace shannon {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct HomCertificate {
  std::vector<std::size_t> mapping;
  friend bool operator==(const HomCertificate&, const HomCertificate&) = default;
};

enum class CohomStatus { True, False, BudgetExceeded };

inline const char* to_string(CohomStatus s) {
  switch (s) {
    case CohomStatus::True: return "TRUE";
    case CohomStatus::False: return "FALSE";
    case CohomStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

struct CohomResult {
  CohomStatus status = CohomStatus::False;
  std::optional<HomCertificate> certificate;  // present iff status == True
  std::uint64_t nodes = 0;                    // assignments tried
};

/// True iff mapping witnesses g <= h.
inline bool verify_certificate(const Graph& g, const Graph& h,
                               const std::vector<std::size_t>& mapping) {
  if (mapping.size() != g.order()) return false;
  for (auto x : mapping)
    if (x >= h.order()) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const std::size_t a = mapping[u], b = mapping[v];
      if (a == b || h.adjacent(a, b)) return false;
    }
  }
  return true;
}

inline bool verify_certificate(const Graph& g, const Graph& h, const HomCertificate& c) {
  return verify_certificate(g, h, c.mapping);
}

inline HomCertificate identity_certificate(std::size_t n) {
  HomCertificate c;
  c.mapping.resize(n);
  std::iota(c.mapping.begin(), c.mapping.end(), std::size_t{0});
  return c;
}

namespace detail {

class CohomSearch {
 public:
  CohomSearch(const Graph& g, const Graph& h, std::uint64_t budget)
      : gbar_(complement(g)), hbar_(complement(h)), budget_(budget) {
    const std::size_t n = gbar_.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return gbar_.degree(a) > gbar_.degree(b);
    });
    mapping_.assign(n, 0);
  }

  CohomResult run() {
    CohomResult r;
    std::vector<VertexSet> domains(gbar_.order(), VertexSet::full(hbar_.order()));
    const bool found = extend(0, domains);
    r.nodes = nodes_;
    if (found) {
      r.status = CohomStatus::True;
      r.certificate = HomCertificate{mapping_};
    } else {
      r.status = exceeded_ ? CohomStatus::BudgetExceeded : CohomStatus::False;
    }
    return r;
  }

 private:
  bool extend(std::size_t depth, const std::vector<VertexSet>& domains) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    const VertexSet& nbrs = gbar_.neighbors(u);
    for (std::size_t a = domains[u].first(); a != VertexSet::npos;
         a = domains[u].next(a + 1)) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      // Forward check: unassigned neighbours of u must land in N_hbar(a).
      std::vector<VertexSet> next = domains;
      bool wiped = false;
      for (std::size_t k = depth + 1; k < order_.size() && !wiped; ++k) {
        const std::size_t w = order_[k];
        if (!nbrs.test(w)) continue;
        next[w] &= hbar_.neighbors(a);
        wiped = next[w].none();
      }
      if (wiped) continue;
      mapping_[u] = a;
      if (extend(depth + 1, next)) return true;
      if (exceeded_) return false;
    }
    return false;
  }

  Graph gbar_, hbar_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> mapping_;
};

}  // namespace detail

/// Decides g <= h by backtracking over complement(g) in descending-degree
/// order with bitset forward checking. FALSE only after the search space is
/// exhausted; BudgetExceeded when more than `budget` assignments were tried.
inline CohomResult cohom_leq(const Graph& g, const Graph& h,
                             std::uint64_t budget = kDefaultSearchBudget) {
  if (budget == 0) throw std::invalid_argument("search budget must be at least 1");
  if (g == h) return {CohomStatus::True, identity_certificate(g.order()), 0};
  CohomResult r = detail::CohomSearch(g, h, budget).run();
  if (r.certificate && !verify_certificate(g, h, *r.certificate))
    throw std::logic_error("cohom_leq produced an invalid certificate");
  return r;
}

/// f : A <= B and g : C <= D give A ⊔ C <= B ⊔ D.
inline HomCertificate union_certificate(const HomCertificate& f, std::size_t b_order,
                                        const HomCertificate& g) {
  HomCertificate out = f;
  for (auto x : g.mapping) out.mapping.push_back(b_order + x);
  return out;
}

/// f : A <= B and g : C <= D give A ⊠ C <= B ⊠ D, (a, c) -> (f(a), g(c)).
inline HomCertificate product_certificate(const HomCertificate& f, const HomCertificate& g,
                                          std::size_t d_order) {
  HomCertificate out;
  out.mapping.reserve(f.mapping.size() * g.mapping.size());
  for (auto fa : f.mapping)
    for (auto gc : g.mapping) out.mapping.push_back(fa * d_order + gc);
  return out;
}

/// f : A <= B and g : B <= C give A <= C.
inline HomCertificate compose_certificates(const HomCertificate& f,
                                           const HomCertificate& g) {
  HomCertificate out;
  out.mapping.reserve(f.mapping.size());
  for (auto x : f.mapping) out.mapping.push_back(g.mapping.at(x));
  return out;
}

}  // namespace shannon
