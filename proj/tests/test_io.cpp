#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "distcol/errors.hpp"
#include "distcol/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace distcol;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

}  // namespace

TEST(Dimacs, WritesCanonicalText) {
  EXPECT_EQ(to_dimacs(fixture::path(3)), "p edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(to_dimacs(Graph(2)), "p edge 2 0\n");
}

TEST(Dimacs, ReadsCommentsAndColFormat) {
  const Graph g = parse("c a comment\nc another\np col 4 3\ne 1 2\ne 4 3\n\ne 2 3\n");
  EXPECT_EQ(g, Graph(4, {{0, 1}, {2, 3}, {1, 2}}));
}

TEST(Dimacs, RoundTripIsBitExact) {
  for (const Graph& g : oracle::corpus(50, 0, 30, 41)) {
    const std::string text = to_dimacs(g);
    const Graph back = parse(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_dimacs(back), text);
  }
}

TEST(Dimacs, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "distcol_io_test.col";
  write_dimacs(path, fixture::heawood());
  EXPECT_EQ(read_dimacs(path), fixture::heawood());
  std::filesystem::remove(path);
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("e 1 2\n"), ParseError);
  EXPECT_THROW(parse("p edge 3 2\ne 1 2\n"), ParseError);
  EXPECT_THROW(parse("p edge 3 1\ne 1 4\n"), ParseError);
  EXPECT_THROW(parse("p edge 3 1\ne 2 2\n"), ParseError);
  EXPECT_THROW(parse("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
  EXPECT_THROW(parse("p edge 3 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse("p edge 3 1\nx 1 2\n"), ParseError);
  EXPECT_THROW(parse("p edge three 1\ne 1 2\n"), ParseError);
}

TEST(Dimacs, MissingFileIsAParseError) {
  EXPECT_THROW(read_dimacs(std::filesystem::path("/nonexistent/graph.col")), ParseError);
}

TEST(EdgeList, RoundTrip) {
  for (const Graph& g : oracle::corpus(20, 0, 20, 42)) {
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss), g);
  }
}
