#pragma once

// Property harness for candidate elements of the asymptotic spectrum of
// graphs: maps φ that are monotone under the cohomomorphism preorder,
// additive under ⊔, multiplicative under ⊠, and normalized by φ(K_1) = 1.
// Also checks the Strassen-preorder properties of ≤ and sandwiches the
// Shannon capacity between strong-power lower bounds and spectrum points.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shannon/exact_params.hpp"
#include "shannon/fractional.hpp"
#include "shannon/graph.hpp"
#include "shannon/graph6.hpp"
#include "shannon/haemers.hpp"
#include "shannon/preorder.hpp"
#include "shannon/prng.hpp"
#include "shannon/rational.hpp"
#include "shannon/theta.hpp"

namespace shannon {

using SpectrumValue = std::variant<Rational, double>;

inline double as_double(const SpectrumValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->get_d();
  return std::get<double>(v);
}

/// Rounds to 7 digits after the decimal point.
inline double round7(double x) { return std::round(x * 1e7) / 1e7; }

inline std::string format_real(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  return buf;
}

inline std::string format_value(const SpectrumValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return format_real(std::get<double>(v));
}

inline nlohmann::ordered_json value_json(const SpectrumValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return round7(std::get<double>(v));
}

struct SpectrumPoint {
  std::string name;
  std::function<SpectrumValue(const Graph&)> evaluate;
  bool exact = false;
  double tolerance = 0.0;  // 0 when exact
  std::size_t size_limit = 0;
};

inline constexpr double kDefaultThetaTolerance = 1e-4;

inline SpectrumPoint theta_point(double tol = kDefaultThetaTolerance) {
  return {"theta",
          [tol](const Graph& g) -> SpectrumValue {
            if (g.empty()) return 0.0;
            return lovasz_theta(g, tol).value;
          },
          false, tol, ThetaOptions{}.max_order};
}

inline SpectrumPoint fractional_clique_cover_point(std::size_t size_limit = 36) {
  return {"frac_clique_cover",
          [size_limit](const Graph& g) -> SpectrumValue {
            return fractional_clique_cover(g, size_limit);
          },
          true, 0.0, size_limit};
}

inline std::size_t haemers_point_dmax(std::size_t n) {
  if (n == 0) return 1;
  return std::min<std::size_t>(3, std::max<std::size_t>(1, kHaemersMaxOrder / n));
}

inline SpectrumPoint fractional_haemers_point(unsigned p = 2) {
  return {"haemers_f_p" + std::to_string(p),
          [p](const Graph& g) -> SpectrumValue {
            if (g.empty()) return Rational(0);
            return fractional_haemers(g, p, haemers_point_dmax(g.order())).value;
          },
          true, 0.0, kHaemersMaxOrder};
}

/// α is not a spectrum point (it is not multiplicative); useful as a negative
/// control for the harness.
inline SpectrumPoint independence_point(std::size_t size_limit = 40) {
  return {"alpha",
          [size_limit](const Graph& g) -> SpectrumValue {
            ExactLimits limits;
            limits.independence_max = size_limit;
            return Rational(static_cast<unsigned long>(independence_number(g, limits).size));
          },
          true, 0.0, size_limit};
}

enum class Axiom {
  Monotone,
  Additive,
  Multiplicative,
  Normalized,
  NaturalOrder,  // K̄_n <= K̄_m iff n <= m
  Compatible,    // <= respects ⊔ and ⊠
  Archimedean,   // A <= K̄_r ⊠ B for B nonempty
};

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Monotone: return "MONOTONE";
    case Axiom::Additive: return "ADDITIVE";
    case Axiom::Multiplicative: return "MULTIPLICATIVE";
    case Axiom::Normalized: return "NORMALIZED";
    case Axiom::NaturalOrder: return "NATURAL_ORDER";
    case Axiom::Compatible: return "COMPATIBLE";
    case Axiom::Archimedean: return "ARCHIMEDEAN";
  }
  return "?";
}

struct Violation {
  Axiom axiom = Axiom::Monotone;
  std::size_t trial = 0;
  Graph first, second;  // the pair (G, H) the check was run on
  SpectrumValue lhs = 0.0, rhs = 0.0;
  double excess = 0.0;
  std::string detail;
};

struct Inconclusive {
  Axiom axiom = Axiom::Compatible;
  std::size_t trial = 0;
  Graph first, second;
  std::string detail;
};

struct AuditReport {
  std::string point_name;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;
  std::vector<Inconclusive> inconclusive;

  bool passed() const { return violations.empty(); }
};

namespace detail {

inline SpectrumValue add(const SpectrumValue& a, const SpectrumValue& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return Rational(std::get<Rational>(a) + std::get<Rational>(b));
  return as_double(a) + as_double(b);
}

inline SpectrumValue mul(const SpectrumValue& a, const SpectrumValue& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return Rational(std::get<Rational>(a) * std::get<Rational>(b));
  return as_double(a) * as_double(b);
}

inline bool both_exact(const SpectrumValue& a, const SpectrumValue& b) {
  return std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b);
}

// Returns the excess when lhs == rhs fails (beyond `slack` for real values).
inline std::optional<double> equality_excess(const SpectrumValue& lhs,
                                             const SpectrumValue& rhs, double slack) {
  if (both_exact(lhs, rhs)) {
    const Rational& l = std::get<Rational>(lhs);
    const Rational& r = std::get<Rational>(rhs);
    if (l == r) return std::nullopt;
    return std::abs(Rational(l - r).get_d());
  }
  const double diff = std::abs(as_double(lhs) - as_double(rhs));
  if (diff <= slack) return std::nullopt;
  return diff - slack;
}

inline std::optional<double> leq_excess(const SpectrumValue& lhs, const SpectrumValue& rhs,
                                        double slack) {
  if (both_exact(lhs, rhs)) {
    const Rational& l = std::get<Rational>(lhs);
    const Rational& r = std::get<Rational>(rhs);
    if (l <= r) return std::nullopt;
    return Rational(l - r).get_d();
  }
  const double diff = as_double(lhs) - as_double(rhs);
  if (diff <= slack) return std::nullopt;
  return diff - slack;
}

}  // namespace detail

/// Checks additivity, multiplicativity and monotonicity of phi on one pair.
/// Monotone pairs are constructed: G <= G ⊔ H, and G ⊠ K_1 <= G ⊠ H for
/// nonempty H. Approximate points get 10x their tolerance (relative for
/// products).
inline std::vector<Violation> check_pair(const SpectrumPoint& phi, const Graph& g,
                                         const Graph& h, std::size_t trial = 0) {
  std::vector<Violation> out;
  const double slack = phi.exact ? 0.0 : 10.0 * phi.tolerance;
  auto record = [&](Axiom axiom, SpectrumValue lhs, SpectrumValue rhs, double excess,
                    std::string detail) {
    out.push_back(Violation{axiom, trial, g, h, std::move(lhs), std::move(rhs), excess,
                            std::move(detail)});
  };

  const SpectrumValue vg = phi.evaluate(g);
  const SpectrumValue vh = phi.evaluate(h);
  const Graph gu = disjoint_union(g, h);
  const SpectrumValue vu = phi.evaluate(gu);
  const SpectrumValue vp = phi.evaluate(strong_product(g, h));

  if (auto e = detail::equality_excess(vu, detail::add(vg, vh), slack))
    record(Axiom::Additive, vu, detail::add(vg, vh), *e, "phi(G+H) = phi(G) + phi(H)");

  const SpectrumValue prod = detail::mul(vg, vh);
  const double rel = slack * std::max(1.0, std::abs(as_double(prod)));
  if (auto e = detail::equality_excess(vp, prod, rel))
    record(Axiom::Multiplicative, vp, prod, *e, "phi(G*H) = phi(G) phi(H)");

  if (auto e = detail::leq_excess(vg, vu, slack))
    record(Axiom::Monotone, vg, vu, *e, "G <= G+H");

  if (!h.empty()) {
    const SpectrumValue vg1 = phi.evaluate(strong_product(g, complete_graph(1)));
    if (auto e = detail::leq_excess(vg1, vp, slack))
      record(Axiom::Monotone, vg1, vp, *e, "G*K1 <= G*H");
  }
  return out;
}

inline std::optional<Violation> check_normalized(const SpectrumPoint& phi) {
  const SpectrumValue v = phi.evaluate(complete_graph(1));
  const double slack = phi.exact ? 0.0 : 10.0 * phi.tolerance;
  if (auto e = detail::equality_excess(v, Rational(1), slack))
    return Violation{Axiom::Normalized, 0, complete_graph(1), Graph{}, v, Rational(1), *e,
                     "phi(K1) = 1"};
  return std::nullopt;
}

/// Re-evaluates a stored violation and reports whether it reproduces.
inline bool replays(const SpectrumPoint& phi, const Violation& v) {
  std::vector<Violation> again;
  if (v.axiom == Axiom::Normalized) {
    if (auto n = check_normalized(phi)) again.push_back(*n);
  } else {
    again = check_pair(phi, v.first, v.second, v.trial);
  }
  const double slack = phi.exact ? 0.0 : phi.tolerance;
  return std::any_of(again.begin(), again.end(), [&](const Violation& w) {
    if (w.axiom != v.axiom || w.detail != v.detail) return false;
    if (phi.exact) return format_value(w.lhs) == format_value(v.lhs) &&
                          format_value(w.rhs) == format_value(v.rhs);
    return std::abs(as_double(w.lhs) - as_double(v.lhs)) <= slack &&
           std::abs(as_double(w.rhs) - as_double(v.rhs)) <= slack;
  });
}

/// Seeded audit of the four spectrum axioms on `trials` random pairs with
/// 1..max_n vertices each. Trials are numbered from 1; normalization is trial 0.
inline AuditReport audit_spectrum_point(const SpectrumPoint& phi, std::uint64_t seed,
                                        std::size_t trials, std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("audit: max_n must be positive");
  if (max_n * max_n > phi.size_limit)
    throw std::invalid_argument("audit: products of " + std::to_string(max_n) +
                                "-vertex graphs exceed the size limit of " + phi.name);
  AuditReport report{phi.name, trials, seed, {}, {}};
  if (auto v = check_normalized(phi)) report.violations.push_back(*v);
  SplitMix64 rng(seed);
  for (std::size_t t = 1; t <= trials; ++t) {
    const Graph g = random_graph(rng, max_n);
    const Graph h = random_graph(rng, max_n);
    for (auto& v : check_pair(phi, g, h, t)) report.violations.push_back(std::move(v));
  }
  return report;
}

struct SandwichEntry {
  std::string name;
  SpectrumValue value = 0.0;
  double tolerance = 0.0;
};

struct SandwichReport {
  Graph graph;
  CapacityEstimate lower;
  std::vector<SandwichEntry> uppers;
  std::vector<std::pair<std::string, std::string>> failures;  // point name, message
  double min_upper = std::numeric_limits<double>::infinity();
  std::string min_point;
  double gap = std::numeric_limits<double>::infinity();
  bool resolved = false;
};

inline constexpr double kSandwichResolution = 1e-3;

/// lower = best α(g^N)^(1/N) for N <= n_max; uppers from every point. The
/// minimum over implemented points is only an upper bound on the capacity
/// unless the gap closes.
inline SandwichReport sandwich_report(const Graph& g, std::size_t n_max,
                                      const std::vector<SpectrumPoint>& points,
                                      const ExactLimits& limits = {}) {
  SandwichReport r;
  r.graph = g;
  r.lower = capacity_lower_bound(g, n_max, limits);
  for (const auto& p : points) {
    try {
      SandwichEntry e{p.name, p.evaluate(g), p.tolerance};
      const double v = as_double(e.value);
      if (v < r.min_upper) {
        r.min_upper = v;
        r.min_point = p.name;
      }
      r.uppers.push_back(std::move(e));
    } catch (const std::exception& ex) {
      r.failures.emplace_back(p.name, ex.what());
    }
  }
  r.gap = r.min_upper - r.lower.lower_bound;
  r.resolved = r.gap <= kSandwichResolution;
  return r;
}

namespace detail {

struct ComparablePair {
  Graph partner;
  HomCertificate certificate;
  bool searched = false;  // certificate came from cohom_leq
};

// A partner B with a <= B: a random graph when the search proves
// comparability, otherwise a ⊔ X with the inclusion map.
inline ComparablePair comparable_partner(SplitMix64& rng, const Graph& a, std::size_t max_n,
                                         std::uint64_t budget, bool& budget_hit) {
  const Graph x = random_graph(rng, max_n);
  const CohomResult r = cohom_leq(a, x, budget);
  if (r.status == CohomStatus::True) return {x, *r.certificate, true};
  if (r.status == CohomStatus::BudgetExceeded) budget_hit = true;
  return {disjoint_union(a, x), identity_certificate(a.order()), false};
}

}  // namespace detail

inline constexpr std::size_t kStrassenMaxOrder = 5;

/// Checks the Strassen-preorder properties of <=: the order on K̄_0..K̄_max_n
/// matches the naturals; certificates compose along ⊔ and ⊠; and every A is
/// below K̄_r ⊠ B with r = χ̄(A).
inline AuditReport strassen_axiom_check(std::uint64_t seed, std::size_t trials,
                                        std::size_t max_n,
                                        std::uint64_t budget = kDefaultSearchBudget) {
  if (max_n == 0 || max_n > kStrassenMaxOrder)
    throw std::invalid_argument("strassen check: max_n must be in 1..5");
  AuditReport report{"strassen_preorder", trials, seed, {}, {}};
  auto natural = [](std::size_t k) { return Rational(static_cast<unsigned long>(k)); };

  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t m = 0; m <= max_n; ++m) {
      const Graph a = edgeless_graph(n), b = edgeless_graph(m);
      const CohomResult r = cohom_leq(a, b, budget);
      if (r.status == CohomStatus::BudgetExceeded) {
        report.inconclusive.push_back({Axiom::NaturalOrder, 0, a, b, "budget exceeded"});
        continue;
      }
      if ((r.status == CohomStatus::True) != (n <= m))
        report.violations.push_back({Axiom::NaturalOrder, 0, a, b, natural(n), natural(m),
                                     1.0, std::string("cohom_leq returned ") +
                                              to_string(r.status)});
    }
  }

  SplitMix64 rng(seed);
  for (std::size_t t = 1; t <= trials; ++t) {
    const Graph a = random_graph(rng, max_n);
    const Graph c = random_graph(rng, max_n);
    bool budget_hit = false;
    const auto ab = detail::comparable_partner(rng, a, max_n, budget, budget_hit);
    const auto cd = detail::comparable_partner(rng, c, max_n, budget, budget_hit);
    if (budget_hit)
      report.inconclusive.push_back({Axiom::Compatible, t, a, c,
                                     "partner search exceeded budget; fell back to union"});

    auto fail = [&](Axiom axiom, const Graph& x, const Graph& y, std::string what) {
      report.violations.push_back(
          {axiom, t, x, y, Rational(0), Rational(1), 1.0, std::move(what)});
    };
    if (!verify_certificate(a, ab.partner, ab.certificate) ||
        !verify_certificate(c, cd.partner, cd.certificate)) {
      fail(Axiom::Compatible, a, c, "base certificate does not verify");
      continue;
    }
    const auto uc = union_certificate(ab.certificate, ab.partner.order(), cd.certificate);
    if (!verify_certificate(disjoint_union(a, c), disjoint_union(ab.partner, cd.partner), uc))
      fail(Axiom::Compatible, a, c, "A+C <= B+D certificate does not verify");
    const auto pc = product_certificate(ab.certificate, cd.certificate, cd.partner.order());
    if (!verify_certificate(strong_product(a, c), strong_product(ab.partner, cd.partner), pc))
      fail(Axiom::Compatible, a, c, "A*C <= B*D certificate does not verify");

    // A <= K̄_r ⊠ C: clique i of a minimum cover goes to (i, 0).
    const CliqueCover cover = clique_cover_number(a);
    const Graph target = strong_product(edgeless_graph(cover.size), c);
    HomCertificate arch;
    arch.mapping.resize(a.order());
    for (std::size_t i = 0; i < cover.cliques.size(); ++i)
      for (auto v : cover.cliques[i]) arch.mapping[v] = i * c.order();
    if (!verify_certificate(a, target, arch))
      fail(Axiom::Archimedean, a, c, "A <= K_r-bar * B with r = clique cover number");
  }
  return report;
}

inline std::string graph6_or_empty(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string{};
}

inline nlohmann::ordered_json to_json(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["point"] = r.point_name;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json e;
    e["axiom"] = to_string(v.axiom);
    e["trial"] = v.trial;
    e["first"] = graph6_or_empty(v.first);
    e["second"] = graph6_or_empty(v.second);
    e["lhs"] = value_json(v.lhs);
    e["rhs"] = value_json(v.rhs);
    e["excess"] = v.excess;
    e["detail"] = v.detail;
    j["violations"].push_back(std::move(e));
  }
  j["inconclusive"] = nlohmann::ordered_json::array();
  for (const auto& v : r.inconclusive) {
    nlohmann::ordered_json e;
    e["axiom"] = to_string(v.axiom);
    e["trial"] = v.trial;
    e["first"] = graph6_or_empty(v.first);
    e["second"] = graph6_or_empty(v.second);
    e["detail"] = v.detail;
    j["inconclusive"].push_back(std::move(e));
  }
  return j;
}

inline nlohmann::ordered_json to_json(const CapacityEstimate& c) {
  nlohmann::ordered_json j;
  j["power"] = c.power;
  j["alpha_of_power"] = c.alpha_of_power;
  j["lower_bound"] = round7(c.lower_bound);
  j["witness"] = c.witness;
  return j;
}

inline nlohmann::ordered_json to_json(const SandwichReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph.label();
  j["graph6"] = graph6_or_empty(r.graph);
  j["lower"] = to_json(r.lower);
  j["uppers"] = nlohmann::ordered_json::object();
  for (const auto& e : r.uppers) j["uppers"][e.name] = value_json(e.value);
  j["failures"] = nlohmann::ordered_json::object();
  for (const auto& [name, msg] : r.failures) j["failures"][name] = msg;
  j["min_point"] = r.min_point;
  if (std::isfinite(r.min_upper)) {
    j["min_upper"] = round7(r.min_upper);
    j["gap"] = round7(r.gap);
  } else {
    j["min_upper"] = nullptr;
    j["gap"] = nullptr;
  }
  j["resolved"] = r.resolved;
  j["note"] = r.resolved ? "capacity pinned between lower and min_upper"
                         : "min_upper is an upper bound on the capacity only";
  return j;
}

}  // namespace shannon
