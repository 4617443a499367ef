#pragma once

// Command-line front end. run_cli writes the report to `out`, one-line
// diagnostics to `err`, and returns the exit code:
//   0 success, 1 internal failure, 2 usage or input error, 3 solver limit.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/exact_params.hpp"
#include "shannon/fractional.hpp"
#include "shannon/graph.hpp"
#include "shannon/graph6.hpp"
#include "shannon/haemers.hpp"
#include "shannon/preorder.hpp"
#include "shannon/spectrum.hpp"
#include "shannon/theta.hpp"

#ifndef SHANNON_VERSION
#define SHANNON_VERSION "0.1.0"
#endif

namespace shannon::cli {

using json = nlohmann::ordered_json;

/// K5, K3bar, C7, P4, petersen, g6:<graph6>, or @file.g6 (first line).
inline Graph parse_graph_spec(const std::string& spec) {
  if (spec.empty()) throw ParseError("empty graph name");
  if (spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw ParseError("cannot read graph file '" + spec.substr(1) + "'");
    std::string line;
    std::getline(in, line);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    return parse_graph6(line).with_label(spec);
  }
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3)).with_label(spec);
  if (spec == "petersen") return petersen_graph();
  static const std::regex pattern(R"(^([KCP])(\d{1,4})(bar)?$)");
  std::smatch m;
  if (std::regex_match(spec, m, pattern)) {
    const std::size_t k = std::stoul(m[2].str());
    const bool bar = m[3].matched;
    const char family = m[1].str()[0];
    if (family == 'K') return bar ? edgeless_graph(k) : complete_graph(k);
    if (!bar && family == 'C') {
      if (k < 3) throw ParseError("cycle needs at least 3 vertices: '" + spec + "'");
      return cycle_graph(k);
    }
    if (!bar && family == 'P') return path_graph(k);
  }
  throw ParseError("unknown graph '" + spec + "'");
}

struct Report {
  std::string graph;  // name or graph6
  json parameters = json::object();
  json metadata = json::object();
};

inline std::string plain(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_real(v.get<double>());
  return v.dump();
}

inline void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["graph"] = r.graph;
    j["parameters"] = r.parameters;
    j["metadata"] = r.metadata;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "parameter,value\n";
    for (const auto& [k, v] : r.parameters.items()) {
      std::string s = plain(v);
      if (s.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        s = q + "\"";
      }
      out << k << "," << s << "\n";
    }
  } else {
    std::size_t width = 5;
    for (const auto& [k, v] : r.parameters.items()) width = std::max(width, k.size());
    if (!r.graph.empty()) out << std::left << std::setw(static_cast<int>(width)) << "graph" << "  " << r.graph << "\n";
    for (const auto& [k, v] : r.parameters.items())
      out << std::left << std::setw(static_cast<int>(width)) << k << "  " << plain(v) << "\n";
  }
}

inline std::string describe(const Graph& g) {
  if (!g.label().empty()) return g.label();
  return graph6_or_empty(g);
}

inline json witness_tuples(const CapacityEstimate& c) { return c.witness; }

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shannon capacity bounds and asymptotic-spectrum checks for graphs", "shannon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SHANNON_VERSION));

  std::string format = "table";
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_flag("--timing", timing, "Include runtimes in metadata");
  };

  std::string graph_spec, lhs_spec, rhs_spec, gen_name, point = "theta";
  std::size_t power = 1, dmax = 1, trials = 50, max_n = 4;
  std::size_t alpha_limit = ExactLimits{}.independence_max;
  unsigned field = 2;
  double tol = kDefaultThetaTolerance;
  std::uint64_t seed = 1, budget = kDefaultSearchBudget;

  auto* gen = app.add_subcommand("gen", "Print a named graph in graph6");
  gen->add_option("name", gen_name, "Graph name");
  gen->add_option("--graph", graph_spec, "Graph name or @file.g6");
  add_common(gen);

  auto* bounds = app.add_subcommand("bounds", "All implemented parameters and the capacity sandwich");
  bounds->add_option("--graph", graph_spec, "Graph name or @file.g6")->required();
  bounds->add_option("--power", power, "Largest strong power for the lower bound")->check(CLI::PositiveNumber);
  bounds->add_option("--dmax", dmax, "Largest d for the fractional Haemers bound")->check(CLI::PositiveNumber);
  bounds->add_option("--field", field, "Prime field for the Haemers bound");
  bounds->add_option("--tol", tol, "Theta solver tolerance");
  bounds->add_option("--alpha-limit", alpha_limit, "Vertex limit for exact independence number");
  add_common(bounds);

  auto* capacity = app.add_subcommand("capacity", "Capacity lower bound from strong powers");
  capacity->add_option("--graph", graph_spec, "Graph name or @file.g6")->required();
  capacity->add_option("--power", power, "Largest strong power")->check(CLI::PositiveNumber);
  capacity->add_option("--alpha-limit", alpha_limit, "Vertex limit for exact independence number");
  add_common(capacity);

  auto* preorder = app.add_subcommand("preorder", "Decide lhs <= rhs (cohomomorphism)");
  preorder->add_option("--lhs", lhs_spec, "Left graph")->required();
  preorder->add_option("--rhs", rhs_spec, "Right graph")->required();
  preorder->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
  add_common(preorder);

  auto* theta = app.add_subcommand("theta", "Lovasz theta number");
  theta->add_option("--graph", graph_spec, "Graph name or @file.g6")->required();
  theta->add_option("--tol", tol, "Solver tolerance");
  add_common(theta);

  auto* haemers = app.add_subcommand("haemers", "Haemers bound over GF(p)");
  haemers->add_option("--graph", graph_spec, "Graph name or @file.g6")->required();
  haemers->add_option("--field", field, "Prime p in {2,3,5,7}");
  haemers->add_option("--dmax", dmax, "Largest d for the fractional bound")->check(CLI::PositiveNumber);
  add_common(haemers);

  auto* audit = app.add_subcommand("audit", "Seeded property audit of a spectrum point");
  audit->add_option("--point", point, "Point to audit")
      ->check(CLI::IsMember({"theta", "frac_clique_cover", "haemers_f", "alpha", "strassen"}));
  audit->add_option("--seed", seed, "PRNG seed");
  audit->add_option("--trials", trials, "Number of random pairs");
  audit->add_option("--max-n", max_n, "Vertices per random graph")->check(CLI::PositiveNumber);
  audit->add_option("--tol", tol, "Theta solver tolerance");
  audit->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
  add_common(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    if (code == 0) return 0;
    std::string msg = er.str();
    const auto nl = msg.find('\n');
    err << "usage error: " << (nl == std::string::npos ? msg : msg.substr(0, nl)) << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  Report report;
  report.metadata["tool_version"] = SHANNON_VERSION;

  try {
    if (*gen) {
      const std::string name = !gen_name.empty() ? gen_name : graph_spec;
      if (name.empty()) throw ParseError("gen needs a graph name");
      const Graph g = parse_graph_spec(name);
      const std::string g6 = write_graph6(g);
      if (format == "table") {
        out << g6 << "\n";
        return 0;
      }
      report.graph = describe(g);
      report.parameters["graph6"] = g6;
      report.parameters["vertices"] = g.order();
      report.parameters["edges"] = g.edge_count();
    } else if (*bounds) {
      const Graph g = parse_graph_spec(graph_spec);
      report.graph = describe(g);
      ExactLimits limits;
      limits.independence_max = alpha_limit;
      report.parameters["vertices"] = g.order();
      report.parameters["edges"] = g.edge_count();
      const IndependentSet alpha = independence_number(g, limits);
      report.parameters["alpha"] = alpha.size;
      report.parameters["clique_cover"] = clique_cover_number(g, limits).size;
      std::vector<SpectrumPoint> points{theta_point(tol), fractional_clique_cover_point()};
      if (g.order() * dmax <= kHaemersMaxOrder) {
        const unsigned p = field;
        const std::size_t d = dmax;
        points.push_back({"haemers_f", [p, d](const Graph& x) -> SpectrumValue {
                            return fractional_haemers(x, p, d).value;
                          }, true, 0.0, kHaemersMaxOrder});
      }
      if (g.empty()) throw std::invalid_argument("bounds needs a nonempty graph");
      const SandwichReport s = sandwich_report(g, power, points, limits);
      for (const auto& [name, msg] : s.failures) {
        if (msg.find("exceeds limit") != std::string::npos) throw LimitError(name + ": " + msg);
        throw std::runtime_error(name + ": " + msg);
      }
      for (const auto& e : s.uppers) report.parameters[e.name] = value_json(e.value);
      if (g.order() <= kHaemersMaxOrder)
        report.parameters["haemers_rank"] = haemers_rank(g, field).rank;
      report.parameters["capacity_power"] = s.lower.power;
      report.parameters["capacity_lower"] = round7(s.lower.lower_bound);
      report.parameters["min_upper"] = round7(s.min_upper);
      report.parameters["min_point"] = s.min_point;
      report.parameters["gap"] = round7(s.gap);
      report.parameters["resolved"] = s.resolved;
      report.metadata["theta_tolerance"] = tol;
      report.metadata["field"] = field;
      report.metadata["dmax"] = dmax;
    } else if (*capacity) {
      const Graph g = parse_graph_spec(graph_spec);
      report.graph = describe(g);
      ExactLimits limits;
      limits.independence_max = alpha_limit;
      const CapacityEstimate c = capacity_lower_bound(g, power, limits);
      report.parameters["power"] = c.power;
      report.parameters["alpha_of_power"] = c.alpha_of_power;
      report.parameters["lower_bound"] = round7(c.lower_bound);
      report.parameters["witness"] = witness_tuples(c);
    } else if (*preorder) {
      const Graph a = parse_graph_spec(lhs_spec);
      const Graph b = parse_graph_spec(rhs_spec);
      report.graph = describe(a) + " <= " + describe(b);
      const CohomResult r = cohom_leq(a, b, budget);
      report.parameters["result"] = to_string(r.status);
      report.parameters["nodes"] = r.nodes;
      if (r.certificate) report.parameters["mapping"] = r.certificate->mapping;
      report.metadata["budget"] = budget;
    } else if (*theta) {
      const Graph g = parse_graph_spec(graph_spec);
      report.graph = describe(g);
      const ThetaResult t = lovasz_theta(g, tol);
      report.parameters["theta"] = round7(t.value);
      report.parameters["iterations"] = t.iterations;
      report.parameters["converged"] = t.converged;
      report.metadata["tolerance"] = tol;
    } else if (*haemers) {
      const Graph g = parse_graph_spec(graph_spec);
      report.graph = describe(g);
      const HaemersResult h = haemers_rank(g, field);
      report.parameters["haemers_rank"] = h.rank;
      report.parameters["witness"] = witness_rows(h.witness);
      const FractionalValue f = fractional_haemers(g, field, dmax);
      report.parameters["haemers_f"] = to_string(f.value);
      report.parameters["best_d"] = f.best_d;
      report.metadata["field"] = field;
      report.metadata["dmax"] = dmax;
    } else if (*audit) {
      AuditReport a;
      if (point == "strassen") {
        a = strassen_axiom_check(seed, trials, max_n, budget);
      } else {
        SpectrumPoint p = point == "theta"               ? theta_point(tol)
                          : point == "frac_clique_cover" ? fractional_clique_cover_point()
                          : point == "haemers_f"         ? fractional_haemers_point(2)
                                                         : independence_point();
        a = audit_spectrum_point(p, seed, trials, max_n);
      }
      const json j = to_json(a);
      report.graph = "";
      report.parameters["point"] = j["point"];
      report.parameters["passed"] = j["passed"];
      report.parameters["violation_count"] = a.violations.size();
      report.parameters["inconclusive_count"] = a.inconclusive.size();
      if (format == "json") {
        report.parameters["violations"] = j["violations"];
        report.parameters["inconclusive"] = j["inconclusive"];
      }
      report.metadata["seed"] = seed;
      report.metadata["trials"] = trials;
      report.metadata["max_n"] = max_n;
    }
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (timing) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    report.metadata["runtime_seconds"] = elapsed.count();
  }
  emit(report, format, out);
  return 0;
}

}  // namespace shannon::cli
