#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <numbers>

#include "distcol/constructions.hpp"
#include "distcol/errors.hpp"
#include "distcol/graph_ops.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace distcol;

namespace {

bool regular_of(const Graph& g, int d) { return g.is_regular() && g.max_degree() == d; }

bool pairwise_within(const Graph& g, const std::vector<Vertex>& set, int t) {
  const auto d = oracle::all_pairs(g);
  for (Vertex u : set) {
    for (Vertex v : set) {
      if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > t) {
        return false;
      }
    }
  }
  return true;
}

void expect_valid_ordering(const BipartiteOrdering& h, OrderingKind kind) {
  ASSERT_EQ(h.part_a.size(), h.part_b.size());
  EXPECT_NO_THROW(validate_bipartition(h.bipartition()));
  EXPECT_EQ(h.kind, kind);
  for (std::size_t i = 0; i < h.part_a.size(); ++i) {
    EXPECT_EQ(h.graph.adjacent(h.part_a[i], h.part_b[i]), kind == OrderingKind::matching);
  }
}

/// Vertex ids of a labelled K_{n,n} with A = 0..n-1 and B = n..2n-1 in the
/// identity ordering.
BipartiteOrdering labelled(const Graph& g, int n) {
  std::vector<Vertex> a(static_cast<std::size_t>(n));
  std::vector<Vertex> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = i;
    b[static_cast<std::size_t>(i)] = n + i;
  }
  return {g, a, b, classify_ordering(g, a, b)};
}

}  // namespace

// ---------------------------------------------------------------- tuple constructions

TEST(CycleProduct, DegreeTwoIsACycle) {
  const auto c = cycle_product(2, 5);
  EXPECT_EQ(c.graph, fixture::cycle(5));
}

TEST(CycleProduct, FourThree) {
  const auto c = cycle_product(4, 3);
  EXPECT_EQ(c.graph.num_vertices(), 24);
  EXPECT_TRUE(regular_of(c.graph, 4));
  EXPECT_EQ(c.block(0).size(), 8u);
  EXPECT_TRUE(pairwise_within(c.graph, c.block(0), 3));
  EXPECT_FALSE(is_bipartite(c.graph));
}

TEST(CycleProduct, FourFourIsBipartite) {
  const auto c = cycle_product(4, 4);
  EXPECT_EQ(c.graph.num_vertices(), 64);
  EXPECT_TRUE(regular_of(c.graph, 4));
  EXPECT_TRUE(is_bipartite(c.graph));
}

TEST(CycleProduct, LabelsFollowBlockMajorLexOrder) {
  const auto c = cycle_product(4, 3);
  EXPECT_EQ(c.labels[0].block, 0);
  EXPECT_EQ(c.labels[0].tuple, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(c.labels[1].tuple, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(c.labels[8].block, 1);
  for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
    const auto& l = c.labels[static_cast<std::size_t>(v)];
    EXPECT_EQ(c.vertex_of(l.block, l.tuple), v);
  }
}

TEST(CycleProduct, EdgesFollowTheFreeCoordinateRule) {
  const auto c = cycle_product(6, 3);
  const int blocks = c.blocks;
  for (Vertex u = 0; u < c.graph.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < c.graph.num_vertices(); ++v) {
      const auto& lu = c.labels[static_cast<std::size_t>(u)];
      const auto& lv = c.labels[static_cast<std::size_t>(v)];
      bool expected = false;
      for (const auto& [from, to] : {std::pair{lu, lv}, std::pair{lv, lu}}) {
        if ((from.block + 1) % blocks == to.block) {
          bool agree = true;
          for (int k = 0; k < c.t; ++k) {
            agree = agree && (k == from.block || from.tuple[static_cast<std::size_t>(k)] == to.tuple[static_cast<std::size_t>(k)]);
          }
          expected = expected || agree;
        }
      }
      EXPECT_EQ(c.graph.adjacent(u, v), expected) << u << " " << v;
    }
  }
}

TEST(CycleProduct, InvariantsAcrossGrid) {
  for (int d : {2, 4, 6}) {
    for (int t : {3, 4, 5}) {
      const auto c = cycle_product(d, t);
      const Graph& g = c.graph;
      SCOPED_TRACE("d=" + std::to_string(d) + " t=" + std::to_string(t));
      EXPECT_TRUE(regular_of(g, d));
      EXPECT_EQ(g.num_vertices(), t * static_cast<int>(std::pow(d / 2, t)));
      for (int i = 0; i < c.blocks; ++i) {
        const auto block = c.block(i);
        for (Vertex u : block) {
          for (Vertex v : block) {
            EXPECT_FALSE(g.adjacent(u, v));
          }
        }
      }
      EXPECT_EQ(is_bipartite(g), t % 2 == 0);
      if (g.num_vertices() <= 400) {
        EXPECT_TRUE(pairwise_within(g, c.block(0), t));
      }
      if (t % 2 == 1 && g.num_vertices() <= 200) {
        for (int len = 3; len < t; len += 2) {
          EXPECT_FALSE(oracle::has_cycle(g, len));
        }
      }
    }
  }
}

TEST(CycleProduct, RejectsBadParameters) {
  EXPECT_THROW(cycle_product(3, 3), InvalidArgument);
  EXPECT_THROW(cycle_product(0, 3), InvalidArgument);
  EXPECT_THROW(cycle_product(4, 2), InvalidArgument);
  EXPECT_THROW(cycle_product(4, 1), InvalidArgument);
}

TEST(CycleProduct, TwoBlockVariantMergesLinks) {
  const auto c = cycle_product(4, 2, {SizeCap{}, true});
  EXPECT_EQ(c.graph.num_vertices(), 8);
  EXPECT_TRUE(regular_of(c.graph, 3));
  EXPECT_TRUE(is_bipartite(c.graph));
}

TEST(CycleProduct, SizeCap) {
  EXPECT_THROW(cycle_product(8, 8, {SizeCap{1000, 10000}, false}), TooLarge);
}

TEST(Cycle3tProduct, DegreeTwoIsNineCycle) { EXPECT_EQ(cycle_3t_product(2, 3).graph, fixture::cycle(9)); }

TEST(Cycle3tProduct, FourThree) {
  const auto c = cycle_3t_product(4, 3);
  EXPECT_EQ(c.blocks, 9);
  EXPECT_EQ(c.graph.num_vertices(), 72);
  EXPECT_TRUE(regular_of(c.graph, 4));
  for (int len : {3, 5, 7}) {
    EXPECT_FALSE(oracle::has_cycle(c.graph, len)) << len;
  }
  EXPECT_TRUE(oracle::has_cycle(c.graph, 9));
}

TEST(Cycle3tProduct, RejectsEvenT) {
  EXPECT_THROW(cycle_3t_product(4, 4), InvalidArgument);
  EXPECT_THROW(cycle_3t_product(3, 3), InvalidArgument);
}

// ---------------------------------------------------------------- projective planes

TEST(ProjectivePlane, PrimeDetection) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_THROW(projective_plane_incidence(4), InvalidArgument);
  EXPECT_THROW(projective_plane_incidence(1), InvalidArgument);
}

TEST(ProjectivePlane, FanoIncidenceIsHeawood) {
  const auto h = projective_plane_incidence(2);
  const Graph& g = h.graph;
  EXPECT_EQ(g.num_vertices(), 14);
  EXPECT_EQ(g.num_edges(), 21u);
  EXPECT_TRUE(regular_of(g, 3));
  for (int len : {3, 4, 5}) {
    EXPECT_FALSE(oracle::has_cycle(g, len));
  }
  EXPECT_TRUE(oracle::has_cycle(g, 6));
  // Heawood is distance-transitive with diameter 3 and 1 + 3 + 6 + 4 vertices per sphere.
  const auto d = oracle::all_pairs(g);
  std::vector<int> spheres(4, 0);
  for (std::size_t v = 0; v < 14; ++v) {
    ++spheres[static_cast<std::size_t>(d[0][v])];
  }
  EXPECT_EQ(spheres, (std::vector<int>{1, 3, 6, 4}));
}

TEST(ProjectivePlane, TwoPointsShareExactlyOneLine) {
  for (int q : {2, 3, 5, 7}) {
    const auto h = projective_plane_incidence(q);
    const Graph& g = h.graph;
    const auto n = static_cast<Vertex>(q * q + q + 1);
    EXPECT_EQ(g.num_edges(), static_cast<std::size_t>(n) * static_cast<std::size_t>(q + 1));
    EXPECT_TRUE(regular_of(g, q + 1));
    for (Vertex p1 = 0; p1 < n; ++p1) {
      for (Vertex p2 = p1 + 1; p2 < n; ++p2) {
        int common = 0;
        for (Vertex line : g.neighbours(p1)) {
          common += g.adjacent(line, p2) ? 1 : 0;
        }
        EXPECT_EQ(common, 1);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(h.part_a[static_cast<std::size_t>(v)], v);
    }
  }
}

// ---------------------------------------------------------------- orderings and products

TEST(Ordering, MatchingOfCompleteBipartiteIsIdentity) {
  const auto h = complete_bipartite_ordering(2);
  expect_valid_ordering(h, OrderingKind::matching);
  EXPECT_EQ(h.part_a, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(h.part_b, (std::vector<Vertex>{2, 3}));
}

TEST(Ordering, SixCycle) {
  const Graph g = fixture::cycle(6);
  const std::vector<Vertex> a = {0, 2, 4};
  const std::vector<Vertex> b = {1, 3, 5};
  expect_valid_ordering(matching_ordering(g, a, b), OrderingKind::matching);
  expect_valid_ordering(comatching_ordering(g, a, b), OrderingKind::comatching);
}

TEST(Ordering, EightCycleComatching) {
  const Graph g = fixture::cycle(8);
  expect_valid_ordering(comatching_ordering(g, std::vector<Vertex>{0, 2, 4, 6}, std::vector<Vertex>{1, 3, 5, 7}),
                        OrderingKind::comatching);
}

TEST(Ordering, EmptyGraphHasNoMatching) {
  const Graph g(4);
  EXPECT_THROW(matching_ordering(g, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3}), NoMatching);
}

TEST(Ordering, CompleteBipartiteHasNoComatching) {
  const Graph g = fixture::complete_bipartite(2, 2);
  EXPECT_THROW(comatching_ordering(g, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3}), NoComatching);
}

TEST(Ordering, ClassifyAndValidate) {
  const Graph g = fixture::cycle(4);  // 0-1-2-3-0
  EXPECT_EQ(classify_ordering(g, std::vector<Vertex>{0, 2}, std::vector<Vertex>{1, 3}), OrderingKind::matching);
  const Graph p = fixture::path(4);  // 0-1-2-3
  EXPECT_EQ(classify_ordering(p, std::vector<Vertex>{0, 2}, std::vector<Vertex>{3, 1}), OrderingKind::unordered);
  EXPECT_EQ(classify_ordering(p, std::vector<Vertex>{0, 2}, std::vector<Vertex>{3, 1}), OrderingKind::unordered);
  EXPECT_THROW(validate_balanced(g, std::vector<Vertex>{0, 2}, std::vector<Vertex>{1}), InvalidArgument);
  EXPECT_THROW(validate_balanced(g, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3}), InvalidArgument);
}

TEST(BbpProduct, TwoByTwoSquare) {
  const auto k = complete_bipartite_ordering(2);
  const auto prod = bbp_product(k, k);
  // (a1_i, a2_j) = 2i + j and (b1_i, b2_j) = 4 + 2i + j; every pair is an edge
  // except (i, j) - (1-i, 1-j).
  std::vector<Edge> expected;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k2 = 0; k2 < 2; ++k2) {
        for (int l = 0; l < 2; ++l) {
          if (!(k2 == 1 - i && l == 1 - j)) {
            expected.push_back({2 * i + j, 4 + 2 * k2 + l});
          }
        }
      }
    }
  }
  EXPECT_EQ(prod.graph, Graph(8, expected));
  EXPECT_EQ(prod.graph.num_edges(), 12u);
  EXPECT_TRUE(regular_of(prod.graph, 3));
  EXPECT_EQ(prod.kind, OrderingKind::matching);
}

TEST(BbpProduct, SingleEdgeIsIdentity) {
  const auto k = complete_bipartite_ordering(1);
  const auto prod = bbp_product(k, k);
  EXPECT_EQ(prod.graph, Graph(2, {{0, 1}}));
}

TEST(BbpProduct, DegreeLawOnCycles) {
  // C_8 as a 2-regular 4+4 graph, in both orderings, against K_{2,2}.
  const Graph c8 = fixture::cycle(8);
  const std::vector<Vertex> a = {0, 2, 4, 6};
  const std::vector<Vertex> b = {1, 3, 5, 7};
  const auto m = matching_ordering(c8, a, b);
  const auto cm = comatching_ordering(c8, a, b);
  const auto k = complete_bipartite_ordering(2);
  EXPECT_TRUE(regular_of(bbp_product(m, k).graph, 3));
  EXPECT_TRUE(regular_of(bbp_product(cm, k).graph, 4));
  EXPECT_TRUE(regular_of(bbp_product(k, cm).graph, 4));
  EXPECT_TRUE(regular_of(bbp_product(cm, cm).graph, 4));
}

TEST(BbpProduct, RejectsUnbalancedInput) {
  BipartiteOrdering bad{fixture::path(3), {0, 2}, {1}, OrderingKind::unordered};
  EXPECT_THROW(bbp_product(bad, complete_bipartite_ordering(1)), InvalidArgument);
}

// ---------------------------------------------------------------- larger constructions

TEST(CompleteBipartite, Shapes) {
  EXPECT_EQ(complete_bipartite(1, 1).graph, Graph(2, {{0, 1}}));
  const auto k33 = complete_bipartite(3, 3);
  EXPECT_EQ(k33.graph.num_edges(), 9u);
  const auto k23 = complete_bipartite(2, 3);
  EXPECT_EQ(k23.graph.num_vertices(), 5);
  EXPECT_EQ(k23.graph.num_edges(), 6u);
  std::vector<int> degrees;
  for (Vertex v = 0; v < 5; ++v) {
    degrees.push_back(k23.graph.degree(v));
  }
  EXPECT_EQ(degrees, (std::vector<int>{3, 3, 2, 2, 2}));
  EXPECT_EQ(k23.part_a, (std::vector<Vertex>{0, 1}));
}

TEST(IteratedProduct, BaseCaseIsCompleteBipartite) {
  const auto h = iterated_product(3, 2);
  EXPECT_EQ(h.graph, fixture::complete_bipartite(3, 3));
}

TEST(IteratedProduct, ThreeThreeIsTwoByTwoSquare) {
  const auto k = complete_bipartite_ordering(2);
  EXPECT_EQ(iterated_product(3, 3).graph, bbp_product(k, k).graph);
}

TEST(IteratedProduct, LineGraphPowerIsComplete) {
  for (const auto& [d, t] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{3, 3}, std::pair{5, 3}, std::pair{4, 4}}) {
    const auto h = iterated_product(d, t);
    const Graph& g = h.graph;
    const int dp = (d - 1) / (t - 1) + 1;
    SCOPED_TRACE("d=" + std::to_string(d) + " t=" + std::to_string(t));
    EXPECT_TRUE(regular_of(g, d));
    EXPECT_TRUE(is_bipartite(g));
    EXPECT_EQ(g.num_edges(), static_cast<std::size_t>(d * std::pow(dp, t - 1)));
    const Graph lt = oracle::power(oracle::line_graph(g), t);
    const auto m = static_cast<std::size_t>(g.num_edges());
    EXPECT_EQ(lt.num_edges(), m * (m - 1) / 2);
  }
}

TEST(IteratedProduct, RejectsIncongruentDegree) {
  EXPECT_THROW(iterated_product(3, 4), InvalidArgument);
  EXPECT_THROW(iterated_product(4, 3), InvalidArgument);
  EXPECT_THROW(iterated_product(3, 1), InvalidArgument);
}

TEST(EvenEdgeConstruction, EightSix) {
  const auto c = even_edge_construction(8, 6);
  EXPECT_EQ(c.t1, 4);
  EXPECT_EQ(c.d1, 6);
  EXPECT_EQ(c.d2, 2);
  const Graph& g = c.product.graph;
  // |V| = 2 * (|V(G1)| / 2) * d2 = 4 * 3^4 * 2.
  EXPECT_EQ(g.num_vertices(), 648);
  EXPECT_TRUE(regular_of(g, 8));
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_EQ(c.x.size(), 162u);
  EXPECT_EQ(c.y.size(), 162u);
  const auto edges = c.clique_edges();
  EXPECT_EQ(edges.size(), 810u);
  EXPECT_GT(static_cast<double>(edges.size()), std::pow(8.0, 6) / (std::numbers::e * 6 * std::pow(2.0, 5)));
}

TEST(EvenEdgeConstruction, CliqueEdgesPairwiseCloseInLineGraph) {
  const auto c = even_edge_construction(8, 6);
  const Graph& g = c.product.graph;
  const Graph l = oracle::line_graph(g);
  const auto edges = c.clique_edges();
  std::vector<Vertex> ids;
  for (const auto& e : edges) {
    ids.push_back(static_cast<Vertex>(*g.edge_index(e.u, e.v)));
  }
  // BFS in the line graph from every clique edge.
  std::vector<int> dist(static_cast<std::size_t>(l.num_vertices()));
  for (Vertex s : ids) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (dist[static_cast<std::size_t>(v)] == c.t) {
        continue;
      }
      for (Vertex w : l.neighbours(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex other : ids) {
      ASSERT_GE(dist[static_cast<std::size_t>(other)], 0) << "edges " << s << " and " << other;
    }
  }
}

TEST(EvenEdgeConstruction, FactorIsTupleProduct) {
  const auto c = even_edge_construction(8, 6);
  EXPECT_EQ(c.factor.graph.num_vertices(), 4 * 81);
  EXPECT_TRUE(regular_of(c.factor.graph, 6));
}

TEST(EvenEdgeConstruction, RejectsBadParameters) {
  EXPECT_THROW(even_edge_construction(8, 5), InvalidArgument);
  EXPECT_THROW(even_edge_construction(12, 6), InvalidArgument);
  EXPECT_THROW(even_edge_construction(8, 4), InvalidArgument);
  EXPECT_THROW(even_edge_construction(4, 4, {SizeCap{}, true}), InvalidArgument);
}

TEST(EvenEdgeConstruction, FourVariantWhenAllowed) {
  const auto c = even_edge_construction(8, 4, {SizeCap{}, true});
  const Graph& g = c.product.graph;
  // The merged two-block factor is 3-regular, so the product is 3 + 4 regular.
  EXPECT_TRUE(regular_of(g, 7));
  EXPECT_TRUE(is_bipartite(g));
  const auto edges = c.clique_edges();
  EXPECT_FALSE(edges.empty());
  const Graph l = oracle::line_graph(g);
  const auto d = oracle::all_pairs(l);
  for (const auto& e : edges) {
    for (const auto& f : edges) {
      EXPECT_LE(d[*g.edge_index(e.u, e.v)][*g.edge_index(f.u, f.v)], 4);
    }
  }
}

TEST(Labelled, HelperClassifies) {
  const auto h = labelled(fixture::complete_bipartite(2, 2), 2);
  EXPECT_EQ(h.kind, OrderingKind::matching);
}
