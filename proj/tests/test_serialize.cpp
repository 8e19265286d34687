#include <gtest/gtest.h>

#include "distcol/errors.hpp"
#include "distcol/serialize.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace distcol;
using nlohmann::json;

TEST(Serialize, ModeNames) {
  EXPECT_STREQ(to_string(PowerMode::vertex), "vertex");
  EXPECT_STREQ(to_string(PowerMode::edge), "edge");
  EXPECT_EQ(parse_mode("edge"), PowerMode::edge);
  EXPECT_THROW(parse_mode("Edge"), InvalidArgument);
}

TEST(Serialize, Roots) {
  EXPECT_EQ(root_to_json(Root{Vertex{3}}), json::parse(R"({"vertex":3})"));
  EXPECT_EQ(root_to_json(Root{Edge{1, 4}}), json::parse(R"({"edge":[1,4]})"));
}

TEST(Serialize, GraphRoundTrip) {
  for (const Graph& g : oracle::corpus(30, 0, 20, 12)) {
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  }
  EXPECT_EQ(graph_to_json(fixture::path(3)), json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})"));
}

TEST(Serialize, GraphRejectsMalformed) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges":[]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":2,"edges":[[0,2]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"([1,2])")), ParseError);
}

TEST(Serialize, ColouringFormat) {
  const Colouring c{{PowerMode::edge, 2}, {0, 1, 2, 0}, 3};
  const json j = to_json(c);
  EXPECT_EQ(j, json::parse(R"({"mode":"edge","t":2,"numColours":3,"colours":[0,1,2,0]})"));
  const auto back = colouring_from_json(j);
  EXPECT_EQ(back.target.mode, PowerMode::edge);
  EXPECT_EQ(back.target.t, 2);
  EXPECT_EQ(back.num_colours, 3);
  EXPECT_EQ(back.colours, c.colours);
  EXPECT_THROW(colouring_from_json(json::parse(R"({"mode":"edge"})")), ParseError);
}

TEST(Serialize, TupleLabels) {
  const auto p = cycle_product(4, 3);
  const json j = labels_to_json(p);
  EXPECT_EQ(j["kind"], "tuple");
  ASSERT_EQ(j["labels"].size(), 24u);
  EXPECT_EQ(j["labels"][9], json::parse(R"({"vertex":9,"block":1,"tuple":[1,1,2]})"));
}

TEST(Serialize, BipartiteLabels) {
  const json j = labels_to_json(complete_bipartite_ordering(2));
  EXPECT_EQ(j["kind"], "bipartite");
  EXPECT_EQ(j["ordering"], "matching");
  EXPECT_EQ(j["labels"][3], json::parse(R"({"vertex":3,"part":"B","index":1})"));
  const json k = labels_to_json(complete_bipartite(1, 2));
  EXPECT_EQ(k["labels"][2]["part"], "B");
}

TEST(Serialize, Reports) {
  const auto d = aks_density_profile(fixture::star(8), 2, PowerMode::vertex);
  const json dj = to_json(d);
  EXPECT_EQ(dj["maxDegreePower"], 8);
  EXPECT_EQ(dj["impliedF"]["numerator"], 64);
  EXPECT_EQ(dj["impliedF"]["denominator"], 28);
  const json inf = to_json(aks_density_profile(fixture::cycle(6), 1, PowerMode::vertex));
  EXPECT_TRUE(inf["impliedFValue"].is_null());

  const json pj = to_json(path_pair_statistic(fixture::cycle(6), 0, 2, PathVariant::plain));
  EXPECT_EQ(pj["pathCount"], 1);
  EXPECT_EQ(pj["pairCount"], 1);
  EXPECT_EQ(pj["variant"], "plain");
  EXPECT_EQ(pj["root"], json::parse(R"({"vertex":0})"));

  const json tj = to_json(theorem_constant_check(fixture::binary_tree(15), 2, 6, PowerMode::vertex));
  EXPECT_TRUE(tj.contains("bound"));
  EXPECT_EQ(tj["holds"], true);
}
