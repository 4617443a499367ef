#include <gtest/gtest.h>

#include "shannon/errors.hpp"
#include "shannon/graph6.hpp"
#include "shannon/prng.hpp"

namespace shannon {
namespace {

// Expected strings come from networkx's graph6 writer with the same labelling.
TEST(Graph6, ReferenceStrings) {
  EXPECT_EQ(write_graph6(complete_graph(1)), "@");
  EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(write_graph6(edgeless_graph(2)), "A?");
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(write_graph6(complete_graph(7)), "F~~~w");
  EXPECT_EQ(write_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(write_graph6(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(write_graph6(Graph{}), "?");
}

TEST(Graph6, ParseReference) {
  EXPECT_EQ(parse_graph6("@"), complete_graph(1));
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("A?"), edgeless_graph(2));
  EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen_graph());
  EXPECT_TRUE(parse_graph6("?").empty());
}

TEST(Graph6, RoundTripProperty) {
  SplitMix64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(rng, 20, 0);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
  const Graph big = cycle_graph(62);
  EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);      // too short
  EXPECT_THROW(parse_graph6("A__"), ParseError);    // too long
  EXPECT_THROW(parse_graph6("A "), ParseError);     // byte below 63
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);  // byte above 126
  EXPECT_THROW(parse_graph6("~??"), ParseError);    // long form
  EXPECT_THROW(parse_graph6("A@"), ParseError);     // nonzero padding
  EXPECT_THROW(write_graph6(cycle_graph(63)), LimitError);
}

}  // namespace
}  // namespace shannon
