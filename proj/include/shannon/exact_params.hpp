#pragma once

// Exact combinatorial parameters. The subrank of a graph in the cohomomorphism
// preorder is its independence number, the rank is its clique cover number,
// and strong powers give lower bounds on the Shannon capacity.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/graph.hpp"
#include "shannon/preorder.hpp"

namespace shannon {

struct ExactLimits {
  std::size_t independence_max = 40;
  std::size_t clique_cover_max = 20;
  std::size_t search_order_max = 2048;  // vertices per side in asymptotic search
};

struct IndependentSet {
  std::size_t size = 0;
  std::vector<std::size_t> vertices;  // sorted
};

struct CliqueCover {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> cliques;  // partition of V, sorted
};

inline bool is_independent(const Graph& g, const std::vector<std::size_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline bool is_clique(const Graph& g, const std::vector<std::size_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace detail {

// Maximum clique by branch and bound with greedy-colouring bounds. Vertices
// are expected to be pre-sorted (index order = branching priority).
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    expand(VertexSet::full(g_.order()));
    return best_;
  }

 private:
  void expand(VertexSet candidates) {
    std::vector<std::pair<std::size_t, std::size_t>> colored;  // (vertex, colour)
    VertexSet uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet q = uncolored;
      for (std::size_t v = q.first(); v != VertexSet::npos; v = q.next(v + 1)) {
        q.subtract(g_.neighbors(v));
        uncolored.reset(v);
        colored.emplace_back(v, color);
      }
    }
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      const auto [v, c] = *it;
      if (current_.size() + c <= best_.size()) return;
      current_.push_back(v);
      VertexSet next = candidates & g_.neighbors(v);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  std::vector<std::size_t> current_, best_;
};

inline std::vector<std::size_t> maximum_clique(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::size_t> clique = MaxCliqueSearch(permuted(g, position)).run();
  for (auto& v : clique) v = order[v];
  std::sort(clique.begin(), clique.end());
  return clique;
}

// Exact vertex colouring by DSATUR branch and bound.
class DsaturColoring {
 public:
  DsaturColoring(const Graph& g, std::size_t lower_bound)
      : g_(g), n_(g.order()), lower_(lower_bound),
        color_(n_, kNone), conflicts_(n_, std::vector<std::size_t>(n_ + 1, 0)) {}

  std::vector<std::size_t> run() {
    greedy_upper_bound();
    if (best_count_ > lower_) search(0, 0);
    return best_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t pick(const std::vector<std::size_t>& saturation) const {
    std::size_t best = kNone, best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != kNone) continue;
      std::size_t deg = 0;
      g_.neighbors(v).for_each([&](std::size_t w) { deg += color_[w] == kNone; });
      if (best == kNone || saturation[v] > saturation[best] ||
          (saturation[v] == saturation[best] && deg > best_deg)) {
        best = v;
        best_deg = deg;
      }
    }
    return best;
  }

  std::vector<std::size_t> saturation() const {
    std::vector<std::size_t> s(n_, 0);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t c = 0; c < n_; ++c) s[v] += conflicts_[v][c] > 0;
    return s;
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    g_.neighbors(v).for_each([&](std::size_t w) { ++conflicts_[w][c]; });
  }
  void unassign(std::size_t v) {
    const std::size_t c = color_[v];
    g_.neighbors(v).for_each([&](std::size_t w) { --conflicts_[w][c]; });
    color_[v] = kNone;
  }

  void greedy_upper_bound() {
    std::size_t used = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t v = pick(saturation());
      std::size_t c = 0;
      while (conflicts_[v][c] > 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = color_;
    best_count_ = used;
    for (std::size_t v = 0; v < n_; ++v) unassign(v);
  }

  void search(std::size_t colored, std::size_t used) {
    if (best_count_ <= lower_) return;
    if (colored == n_) {
      if (used < best_count_) {
        best_count_ = used;
        best_ = color_;
      }
      return;
    }
    const std::size_t v = pick(saturation());
    for (std::size_t c = 0; c < used; ++c) {
      if (conflicts_[v][c] > 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_count_ <= lower_) return;
    }
    if (used + 1 < best_count_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t lower_;
  std::vector<std::size_t> color_;
  std::vector<std::vector<std::size_t>> conflicts_;  // [vertex][colour] -> #neighbours
  std::vector<std::size_t> best_;
  std::size_t best_count_ = 0;
};

inline std::size_t integer_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

inline mpz_class mpz_pow(std::size_t base, std::size_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace detail

/// α(g) with a maximum independent set as witness.
inline IndependentSet independence_number(const Graph& g, const ExactLimits& limits = {}) {
  if (g.order() > limits.independence_max)
    throw LimitError("independence number: " + std::to_string(g.order()) +
                     " vertices exceeds limit " + std::to_string(limits.independence_max));
  IndependentSet r;
  r.vertices = detail::maximum_clique(complement(g));
  r.size = r.vertices.size();
  return r;
}

/// χ̄(g) = χ(complement(g)), with the cover as a partition into cliques.
inline CliqueCover clique_cover_number(const Graph& g, const ExactLimits& limits = {}) {
  if (g.order() > limits.clique_cover_max)
    throw LimitError("clique cover number: " + std::to_string(g.order()) +
                     " vertices exceeds limit " + std::to_string(limits.clique_cover_max));
  CliqueCover r;
  if (g.empty()) return r;
  const std::size_t alpha = detail::maximum_clique(complement(g)).size();
  const auto colors = detail::DsaturColoring(complement(g), alpha).run();
  const std::size_t k = *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::vector<std::size_t>> classes(k);
  for (std::size_t v = 0; v < g.order(); ++v) classes[colors[v]].push_back(v);
  std::sort(classes.begin(), classes.end());
  r.size = k;
  r.cliques = std::move(classes);
  return r;
}

struct CapacityEstimate {
  std::size_t power = 0;
  std::size_t alpha_of_power = 0;
  double lower_bound = 0.0;
  std::vector<std::vector<std::size_t>> witness;  // vertex tuples of g
};

/// Index of a strong-power vertex decoded into its coordinate tuple.
inline std::vector<std::size_t> power_tuple(std::size_t index, std::size_t base,
                                            std::size_t power) {
  std::vector<std::size_t> t(power);
  for (std::size_t i = power; i-- > 0;) {
    t[i] = index % base;
    index /= base;
  }
  return t;
}

/// Best α(g^N)^(1/N) over N = 1..max_power; ties go to the smaller N.
inline CapacityEstimate capacity_lower_bound(const Graph& g, std::size_t max_power,
                                             const ExactLimits& limits = {}) {
  if (max_power == 0) throw std::invalid_argument("max_power must be positive");
  CapacityEstimate best;
  bool have = false;
  for (std::size_t n = 1; n <= max_power; ++n) {
    if (detail::integer_pow(g.order(), n, limits.independence_max) >
        limits.independence_max)
      throw LimitError("capacity: " + std::to_string(g.order()) + "^" + std::to_string(n) +
                       " vertices exceeds independence limit " +
                       std::to_string(limits.independence_max));
    const Graph power = strong_power(g, n);
    IndependentSet is = independence_number(power, limits);
    // alpha^(1/n) > best^(1/best.power)  <=>  alpha^best.power > best^n
    if (have && detail::mpz_pow(is.size, best.power) <=
                    detail::mpz_pow(best.alpha_of_power, n))
      continue;
    have = true;
    best.power = n;
    best.alpha_of_power = is.size;
    best.lower_bound = std::pow(static_cast<double>(is.size), 1.0 / static_cast<double>(n));
    best.witness.clear();
    for (auto v : is.vertices) best.witness.push_back(power_tuple(v, g.order(), n));
  }
  return best;
}

struct AsympCertificate {
  bool found = false;
  std::size_t power = 0;   // N
  std::size_t copies = 0;  // x
  HomCertificate certificate;  // g^N <= x-fold union of h^N
  bool budget_exceeded = false;  // some sub-search ran out of budget
};

/// Searches for g^N <= (h^N)^{⊔x} with N <= max_power, x <= max_copies. Among
/// all levels the witness with the smallest x^(1/N) is returned (ties: smaller
/// N). A miss is not a refutation of the asymptotic preorder.
inline AsympCertificate asymp_leq_certificate(const Graph& g, const Graph& h,
                                              std::size_t max_power, std::size_t max_copies,
                                              std::uint64_t budget = kDefaultSearchBudget,
                                              const ExactLimits& limits = {}) {
  if (max_power == 0 || max_copies == 0)
    throw std::invalid_argument("max_power and max_copies must be positive");
  AsympCertificate best;
  for (std::size_t n = 1; n <= max_power; ++n) {
    const std::size_t cap = limits.search_order_max;
    if (detail::integer_pow(g.order(), n, cap) > cap ||
        detail::integer_pow(h.order(), n, cap) > cap)
      throw LimitError("asymptotic search: strong power too large");
    const Graph gn = strong_power(g, n);
    const Graph hn = strong_power(h, n);
    for (std::size_t x = 1; x <= max_copies; ++x) {
      // Only strictly better rates are of interest: x^(1/n) < best.x^(1/best.N).
      if (best.found && detail::mpz_pow(x, best.power) >= detail::mpz_pow(best.copies, n))
        break;
      if (x * hn.order() > cap) throw LimitError("asymptotic search: target too large");
      const Graph target = disjoint_copies(hn, x);
      CohomResult r = cohom_leq(gn, target, budget);
      if (r.status == CohomStatus::BudgetExceeded) best.budget_exceeded = true;
      if (r.status == CohomStatus::True) {
        best.found = true;
        best.power = n;
        best.copies = x;
        best.certificate = *r.certificate;
        break;
      }
    }
  }
  return best;
}

}  // namespace shannon
