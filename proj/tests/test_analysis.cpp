#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "distcol/analysis.hpp"
#include "distcol/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace distcol;

namespace {

std::optional<int> girth_oracle(const Graph& g, bool odd_only) {
  for (int len = 3; len <= g.num_vertices(); ++len) {
    if (odd_only && len % 2 == 0) {
      continue;
    }
    if (oracle::has_cycle(g, len)) {
      return len;
    }
  }
  return std::nullopt;
}

struct PathOracle {
  std::uint64_t paths = 0;
  std::uint64_t pairs = 0;
};

// Vertex-rooted counts straight from enumerated paths; each path appears
// twice in the enumeration.
PathOracle vertex_paths(const Graph& g, Vertex root, int t, bool peripheral) {
  const auto layer = oracle::distances_from_set(g, {root});
  PathOracle out;
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const auto& p : oracle::all_paths(g, t)) {
    const Vertex a = p.front();
    const Vertex b = p.back();
    if (a >= b || layer[static_cast<std::size_t>(a)] != t || layer[static_cast<std::size_t>(b)] != t) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 1; peripheral && i + 1 < p.size(); ++i) {
      ok = ok && layer[static_cast<std::size_t>(p[i])] >= t;
    }
    if (ok) {
      ++out.paths;
      pairs.insert({a, b});
    }
  }
  out.pairs = pairs.size();
  return out;
}

PathOracle edge_paths(const Graph& g, Edge root, int t) {
  const auto layer = oracle::distances_from_set(g, {root.u, root.v});
  auto meets = [&](Vertex a, Vertex b) {
    return layer[static_cast<std::size_t>(a)] == t - 1 || layer[static_cast<std::size_t>(b)] == t - 1;
  };
  PathOracle out;
  std::set<std::pair<Edge, Edge>> pairs;
  for (const auto& p : oracle::all_paths(g, t + 1)) {
    const Edge first = make_edge(p[0], p[1]);
    const Edge last = make_edge(p[p.size() - 2], p.back());
    if (!(first < last)) {
      continue;
    }
    if (meets(p[0], p[1]) && meets(p[p.size() - 2], p.back())) {
      ++out.paths;
      pairs.insert({first, last});
    }
  }
  out.pairs = pairs.size();
  return out;
}

bool is_cycle_of(const Graph& g, const std::vector<Vertex>& c, int len) {
  if (static_cast<int>(c.size()) != len) {
    return false;
  }
  std::set<Vertex> distinct(c.begin(), c.end());
  if (static_cast<int>(distinct.size()) != len || *distinct.begin() != c.front()) {
    return false;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) {
      return false;
    }
  }
  return true;
}

Bipartition star_with_centre_in_b(int leaves) {
  Bipartition h{fixture::star(leaves), {}, {0}};
  for (int i = 1; i <= leaves; ++i) {
    h.part_a.push_back(i);
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------- cycles

TEST(Girth, Examples) {
  EXPECT_EQ(girth(fixture::cycle(7)), 7);
  EXPECT_EQ(girth(fixture::petersen()), 5);
  EXPECT_EQ(girth(fixture::heawood()), 6);
  EXPECT_EQ(girth(fixture::complete(4)), 3);
  EXPECT_EQ(girth(fixture::binary_tree(15)), std::nullopt);
  EXPECT_EQ(odd_girth(fixture::petersen()), 5);
  EXPECT_EQ(odd_girth(fixture::heawood()), std::nullopt);
  EXPECT_EQ(odd_girth(fixture::cycle(9)), 9);
}

TEST(Girth, MatchesCycleOracle) {
  for (const Graph& g : oracle::corpus(150, 1, 10, 404)) {
    EXPECT_EQ(girth(g), girth_oracle(g, false));
    EXPECT_EQ(odd_girth(g), girth_oracle(g, true));
  }
}

TEST(FindCycle, MatchesCycleOracle) {
  for (const Graph& g : oracle::corpus(150, 3, 10, 505)) {
    for (int len = 3; len <= std::min(g.num_vertices(), 8); ++len) {
      const auto c = find_cycle(g, len);
      EXPECT_EQ(c.has_value(), oracle::has_cycle(g, len));
      if (c) {
        EXPECT_TRUE(is_cycle_of(g, *c, len));
      }
    }
  }
}

TEST(FindCycle, LengthRange) {
  EXPECT_THROW(find_cycle(fixture::cycle(5), 2), InvalidArgument);
  EXPECT_THROW(find_cycle(fixture::cycle(20), 17), InvalidArgument);
  EXPECT_TRUE(contains_cycle(fixture::cycle(20), 20, 20));
}

TEST(ThinToCycleFree, RemovesEveryCycle) {
  Rng rng(8);
  for (const Graph& g : oracle::corpus(40, 4, 10, 606)) {
    const Graph thin = thin_to_cycle_free(g, 4, rng);
    EXPECT_FALSE(oracle::has_cycle(thin, 4));
    for (const auto& e : thin.edges()) {
      EXPECT_TRUE(g.adjacent(e.u, e.v));
    }
  }
  const auto h = thin_to_cycle_free(random_bipartite(6, 6, 0.7, rng), 6, rng);
  EXPECT_FALSE(oracle::has_cycle(h.graph, 6));
  EXPECT_NO_THROW(validate_bipartition(h));
}

// ---------------------------------------------------------------- edge bounds

TEST(Bunched, StarExamples) {
  const auto h = star_with_centre_in_b(5);
  EXPECT_EQ(bunched_edge_count(h, 3).count, 5u);
  EXPECT_EQ(bunched_edge_count(h, 5).count, 5u);
  EXPECT_EQ(bunched_edge_count(h, 6).count, 0u);
  // Leaves in B have degree 1.
  const Bipartition flipped{h.graph, h.part_b, h.part_a};
  EXPECT_EQ(bunched_edge_count(flipped, 1).count, 5u);
  EXPECT_EQ(bunched_edge_count(flipped, 2).count, 0u);
}

TEST(Bunched, MonotoneInDelta) {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto h = random_bipartite(8, 8, 0.4, rng);
    std::size_t prev = h.graph.num_edges();
    for (double delta = 0; delta <= 9; delta += 0.5) {
      const auto n = bunched_edge_count(h, delta).count;
      EXPECT_LE(n, prev);
      prev = n;
    }
  }
}

TEST(Bunched, HeawoodBoundHolds) {
  const Graph g = fixture::heawood();
  const auto colours = two_colouring(g);
  ASSERT_TRUE(colours.has_value());
  Bipartition h{g, {}, {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ((*colours)[static_cast<std::size_t>(v)] == 0 ? h.part_a : h.part_b).push_back(v);
  }
  const auto r = lemma8_bound_holds(h, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.bunched, 0u);
  EXPECT_NEAR(r.delta, 2 * std::sqrt(7.0) + 16, 1e-9);
  EXPECT_NEAR(r.bound, r.delta * 7, 1e-9);
  EXPECT_THROW(lemma8_bound_holds(h, 3), NotCycleFree);
}

TEST(Pikhurko, Formula) {
  EXPECT_NEAR(pikhurko_bound(2, 16), 64 + 16 * 16, 1e-9);
  EXPECT_NEAR(pikhurko_bound(3, 8), 2 * 8 * 2 + 32 * 8, 1e-9);
  const auto r = pikhurko_bound_check(fixture::heawood(), 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.edges, 21u);
  EXPECT_THROW(pikhurko_bound_check(fixture::heawood(), 3), NotCycleFree);
}

// ---------------------------------------------------------------- density

TEST(Density, CompleteGraph) {
  for (int d : {2, 3, 5}) {
    const auto r = aks_density_profile(fixture::complete(d + 1), 1, PowerMode::vertex);
    EXPECT_EQ(r.max_degree_power, d);
    EXPECT_EQ(r.max_span_edges, d * (d - 1) / 2);
    EXPECT_NEAR(r.implied_f, 2.0 * d / (d - 1), 1e-12);
  }
}

TEST(Density, StarSquare) {
  const auto r = aks_density_profile(fixture::star(8), 2, PowerMode::vertex);
  EXPECT_EQ(r.implied_f_numerator, 64);
  EXPECT_EQ(r.implied_f_denominator, 28);
  EXPECT_NEAR(r.implied_f, 64.0 / 28.0, 1e-12);
}

TEST(Density, TriangleFreeIsInfinite) {
  const auto r = aks_density_profile(fixture::cycle(8), 1, PowerMode::vertex);
  EXPECT_EQ(r.max_span_edges, 0);
  EXPECT_TRUE(std::isinf(r.implied_f));
}

TEST(Density, MatchesNeighbourhoodOracle) {
  for (const Graph& g : oracle::corpus(40, 2, 12, 808)) {
    for (int t : {1, 2}) {
      for (auto mode : {PowerMode::vertex, PowerMode::edge}) {
        const Graph base = mode == PowerMode::vertex ? g : oracle::line_graph(g);
        const Graph p = oracle::power(base, t);
        const auto a = oracle::adjacency_matrix(p);
        std::vector<std::int64_t> span(static_cast<std::size_t>(p.num_vertices()), 0);
        for (Vertex v = 0; v < p.num_vertices(); ++v) {
          const auto nb = p.neighbours(v);
          for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
              span[static_cast<std::size_t>(v)] += a[static_cast<std::size_t>(nb[i])][static_cast<std::size_t>(nb[j])];
            }
          }
        }
        const auto r = aks_density_profile(g, t, mode, {20'000, 5'000'000, true});
        EXPECT_EQ(r.max_degree_power, p.num_vertices() == 0 ? 0 : p.max_degree());
        EXPECT_EQ(r.max_span_edges, span.empty() ? 0 : *std::max_element(span.begin(), span.end()));
        EXPECT_EQ(r.per_root, span);
      }
    }
  }
}

TEST(Density, Caps) {
  EXPECT_THROW(aks_density_profile(fixture::cycle(50), 2, PowerMode::vertex, {10, 1000, false}), TooLarge);
}

// ---------------------------------------------------------------- path pairs

TEST(PathPairs, SmallExamples) {
  const auto c6 = path_pair_statistic(fixture::cycle(6), 0, 2, PathVariant::plain);
  EXPECT_EQ(c6.path_count, 1u);
  EXPECT_EQ(c6.pair_count, 1u);
  EXPECT_EQ(path_pair_statistic(fixture::star(3), 0, 1, PathVariant::plain).path_count, 0u);
  EXPECT_EQ(path_pair_statistic(fixture::cycle(12), 0, 3, PathVariant::peripheral).path_count, 0u);
  const auto c4 = edge_path_pair_statistic(fixture::cycle(4), {0, 1}, 2);
  EXPECT_EQ(c4.path_count, 2u);
  EXPECT_EQ(c4.pair_count, 1u);
  EXPECT_EQ(c4.variant, PathVariant::edge);
}

TEST(PathPairs, CompleteGraphCounts) {
  // In K_5 from vertex 0, A_1 has 4 vertices and every pair is joined by
  // one path of length 1.
  const auto r = path_pair_statistic(fixture::complete(5), 0, 1, PathVariant::plain);
  EXPECT_EQ(r.path_count, 6u);
  EXPECT_EQ(r.pair_count, 6u);
}

TEST(PathPairs, VertexRootMatchesOracle) {
  for (const Graph& g : oracle::corpus(60, 2, 9, 909)) {
    for (Vertex root = 0; root < g.num_vertices(); root += 2) {
      for (int t : {1, 2, 3}) {
        for (bool peripheral : {false, true}) {
          const auto want = vertex_paths(g, root, t, peripheral);
          const auto got =
              path_pair_statistic(g, root, t, peripheral ? PathVariant::peripheral : PathVariant::plain);
          EXPECT_EQ(got.path_count, want.paths);
          EXPECT_EQ(got.pair_count, want.pairs);
        }
      }
    }
  }
}

TEST(PathPairs, EdgeRootMatchesOracle) {
  for (const Graph& g : oracle::corpus(60, 2, 9, 1001)) {
    for (std::size_t i = 0; i < g.num_edges(); i += 3) {
      const Edge root = g.edges()[i];
      for (int t : {2, 3, 4}) {
        const auto want = edge_paths(g, root, t);
        const auto got = edge_path_pair_statistic(g, root, t);
        EXPECT_EQ(got.path_count, want.paths);
        EXPECT_EQ(got.pair_count, want.pairs);
      }
    }
  }
  const Graph p8 = fixture::path(8);
  const auto want = edge_paths(p8, {3, 4}, 2);
  EXPECT_EQ(edge_path_pair_statistic(p8, {3, 4}, 2).pair_count, want.pairs);
  const Graph k33 = fixture::complete_bipartite(3, 3);
  const auto kw = edge_paths(k33, {0, 3}, 2);
  EXPECT_EQ(edge_path_pair_statistic(k33, {0, 3}, 2).path_count, kw.paths);
}

TEST(PathPairs, Rejections) {
  EXPECT_THROW(path_pair_statistic(fixture::cycle(5), 9, 2, PathVariant::plain), InvalidArgument);
  EXPECT_THROW(path_pair_statistic(fixture::cycle(5), 0, 0, PathVariant::plain), InvalidArgument);
  EXPECT_THROW(edge_path_pair_statistic(fixture::cycle(5), {0, 2}, 2), InvalidArgument);
  EXPECT_THROW(edge_path_pair_statistic(fixture::cycle(5), {0, 1}, 1), InvalidArgument);
}

// ---------------------------------------------------------------- explicit constants

TEST(Bounds, Formulas) {
  EXPECT_NEAR(even_vertex_path_bound(3, 2, 6), 26.5 * 6 * std::pow(3.0, 4 - 2.0 / 6), 1e-6);
  EXPECT_NEAR(even_edge_path_bound(3, 3, 6), (112 + 12 * std::pow(2.0, 2.0 / 6)) * 6 * std::pow(3.0, 6 - 2.0 / 6),
              1e-6);
  // t = 3, l = 15: k = 3, k0 = 3, one summand (2*3 + 0) * 3.
  EXPECT_NEAR(odd_vertex_pair_bound(2, 3, 15), (1 + 18 + 9 + 36) * 32.0, 1e-9);
}

TEST(TheoremCheck, TreeIsCycleFree) {
  const Graph tree = fixture::binary_tree(31);
  const auto r = theorem_constant_check(tree, 2, 6, PowerMode::vertex);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.max_degree, 3);
  EXPECT_NEAR(r.epsilon, 2.0 / 6, 1e-12);
  std::uint64_t worst = 0;
  for (Vertex v = 0; v < tree.num_vertices(); ++v) {
    worst = std::max(worst, vertex_paths(tree, v, 2, false).paths);
  }
  EXPECT_EQ(r.max_count, worst);
  EXPECT_NEAR(r.worst_margin, r.bound - static_cast<double>(worst), 1e-6);
}

TEST(TheoremCheck, EdgeModeAndOddCycles) {
  const auto e = theorem_constant_check(fixture::cycle(11), 3, 6, PowerMode::edge);
  EXPECT_TRUE(e.holds);
  EXPECT_EQ(e.statistic, PathVariant::edge);
  const auto o = theorem_constant_check(fixture::cycle(12), 3, 9, PowerMode::vertex);
  EXPECT_TRUE(o.experimental);
  EXPECT_EQ(o.statistic, PathVariant::peripheral);
}

TEST(TheoremCheck, Rejections) {
  EXPECT_THROW(theorem_constant_check(fixture::heawood(), 2, 6, PowerMode::vertex), NotCycleFree);
  EXPECT_THROW(theorem_constant_check(fixture::heawood(), 3, 6, PowerMode::vertex), InvalidArgument);
  EXPECT_THROW(theorem_constant_check(fixture::heawood(), 3, 7, PowerMode::edge), InvalidArgument);
  EXPECT_THROW(theorem_constant_check(fixture::heawood(), 2, 7, PowerMode::vertex), InvalidArgument);
}
