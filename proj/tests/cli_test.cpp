#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "shannon/cli.hpp"

namespace shannon::cli {
namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Invocation& r) { return nlohmann::json::parse(r.out); }

TEST(GraphSpec, Names) {
  EXPECT_EQ(parse_graph_spec("K5"), complete_graph(5));
  EXPECT_EQ(parse_graph_spec("K3bar"), edgeless_graph(3));
  EXPECT_EQ(parse_graph_spec("C7"), cycle_graph(7));
  EXPECT_EQ(parse_graph_spec("P4"), path_graph(4));
  EXPECT_EQ(parse_graph_spec("petersen"), petersen_graph());
  EXPECT_EQ(parse_graph_spec("g6:Dhc"), cycle_graph(5));
  EXPECT_THROW(parse_graph_spec("Q5"), ParseError);
  EXPECT_THROW(parse_graph_spec("C2"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("@/nonexistent/file.g6"), std::invalid_argument);
}

TEST(GraphSpec, File) {
  const std::string path = ::testing::TempDir() + "c5.g6";
  std::ofstream(path) << "Dhc\n";
  EXPECT_EQ(parse_graph_spec("@" + path), cycle_graph(5));
  std::remove(path.c_str());
}

TEST(Cli, BoundsC5) {
  const Invocation r = run({"bounds", "--graph", "C5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  const auto& p = j["parameters"];
  EXPECT_EQ(p["alpha"], 2);
  EXPECT_EQ(p["clique_cover"], 3);
  EXPECT_NEAR(p["theta"].get<double>(), 2.2360680, 1e-4);
  EXPECT_EQ(p["frac_clique_cover"], "5/2");
  EXPECT_EQ(p["haemers_rank"], 3);
  EXPECT_EQ(j["metadata"]["tool_version"], SHANNON_VERSION);
  EXPECT_FALSE(j["metadata"].contains("runtime_seconds"));
}

TEST(Cli, CapacityC5) {
  const Invocation r = run({"capacity", "--graph", "C5", "--power", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto p = parse(r)["parameters"];
  EXPECT_EQ(p["alpha_of_power"], 5);
  EXPECT_EQ(p["lower_bound"], 2.2360680);
  EXPECT_EQ(p["witness"].size(), 5u);
  const Invocation t = run({"capacity", "--graph", "C5", "--power", "2"});
  EXPECT_NE(t.out.find("2.2360680"), std::string::npos);
}

TEST(Cli, Preorder) {
  const Invocation r = run({"preorder", "--lhs", "K3bar", "--rhs", "K2bar"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("FALSE"), std::string::npos);
  const Invocation t = run({"preorder", "--lhs", "C5", "--rhs", "K3bar", "--format", "json"});
  EXPECT_EQ(parse(t)["parameters"]["result"], "TRUE");
  EXPECT_EQ(parse(t)["parameters"]["mapping"].size(), 5u);
}

TEST(Cli, Gen) {
  const Invocation r = run({"gen", "petersen"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "IheA@GUAo\n");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen_graph());
}

TEST(Cli, ThetaAndHaemers) {
  const Invocation t = run({"theta", "--graph", "C7", "--format", "json"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NEAR(parse(t)["parameters"]["theta"].get<double>(), 3.3176672, 1e-6);
  const Invocation h = run({"haemers", "--graph", "C5", "--dmax", "2", "--format", "json"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(parse(h)["parameters"]["haemers_rank"], 3);
  EXPECT_EQ(parse(h)["parameters"]["haemers_f"], "5/2");
}

TEST(Cli, Audit) {
  const Invocation r = run({"audit", "--point", "alpha", "--trials", "20", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto p = parse(r)["parameters"];
  EXPECT_EQ(p["violations"].size(), p["violation_count"].get<std::size_t>());
  const Invocation s = run({"audit", "--point", "strassen", "--trials", "5", "--format", "json"});
  EXPECT_EQ(parse(s)["parameters"]["passed"], true);
}

TEST(Cli, Csv) {
  const Invocation r = run({"capacity", "--graph", "K3bar", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "parameter,value");
  EXPECT_NE(r.out.find("\nalpha_of_power,3\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"bounds"}).code, 2);
  EXPECT_EQ(run({"bounds", "--graph", "C5", "--format", "xml"}).code, 2);
  const Invocation bad = run({"theta", "--graph", "Q9"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(std::count(bad.err.begin(), bad.err.end(), '\n'), 1);
  EXPECT_EQ(run({"theta", "--graph", "g6:@@"}).code, 2);
  const Invocation lim = run({"capacity", "--graph", "C7", "--power", "2"});
  EXPECT_EQ(lim.code, 3);
  EXPECT_EQ(std::count(lim.err.begin(), lim.err.end(), '\n'), 1);
  EXPECT_EQ(run({"theta", "--graph", "K17bar"}).code, 3);
  EXPECT_EQ(run({"haemers", "--graph", "C5", "--field", "4"}).code, 3);
}

TEST(Cli, Timing) {
  const Invocation r = run({"theta", "--graph", "C5", "--format", "json", "--timing"});
  EXPECT_TRUE(parse(r)["metadata"].contains("runtime_seconds"));
}

TEST(Cli, Idempotent) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"bounds", "--graph", "petersen", "--format", "json"},
        std::vector<std::string>{"audit", "--point", "theta", "--trials", "5", "--format", "json"}}) {
    const Invocation a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace shannon::cli
