#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "distcol/graph.hpp"
#include "distcol/graph_ops.hpp"

namespace distcol {

/// Upper limits on generated graph sizes. Generators check the predicted
/// size before allocating anything.
struct SizeCap {
  std::int64_t max_vertices = 1'000'000;
  std::int64_t max_edges = 10'000'000;
};

/// Throws TooLarge if either count exceeds the cap. Counts are passed as
/// doubles so overflowing products still compare correctly.
void check_size(const SizeCap& cap, double vertices, double edges, const char* what);

enum class OrderingKind { matching, comatching, unordered };

const char* to_string(OrderingKind kind);

/// A balanced bipartite graph with index-aligned part labellings
/// a_1..a_n (part_a) and b_1..b_n (part_b).
struct BipartiteOrdering {
  Graph graph;
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
  OrderingKind kind = OrderingKind::unordered;

  std::size_t half_size() const { return part_a.size(); }
  Bipartition bipartition() const { return {graph, part_a, part_b}; }
};

/// matching if every a_i b_i is an edge, comatching if none is, unordered
/// otherwise. An empty ordering is reported as matching.
OrderingKind classify_ordering(const Graph& g, std::span<const Vertex> part_a, std::span<const Vertex> part_b);

/// Throws InvalidArgument unless the parts are balanced and form a valid
/// bipartition of `g`.
void validate_balanced(const Graph& g, std::span<const Vertex> part_a, std::span<const Vertex> part_b);

/// Label of a vertex in a tuple construction: which block U^(i) it lives in
/// and its t-tuple of symbols from 1..d/2.
struct TupleVertex {
  int block = 0;
  std::vector<int> tuple;
};

/// Result of the cyclic tuple constructions. Vertex ids run through blocks in
/// increasing order, tuples in lexicographic order inside each block
/// (coordinate 0 most significant).
struct TupleProduct {
  Graph graph;
  int degree = 0;  // d
  int t = 0;       // tuple length
  int blocks = 0;  // t, or 3t for the long-cycle variant
  std::vector<TupleVertex> labels;

  Vertex block_size() const;
  std::vector<Vertex> block(int i) const;
  Vertex vertex_of(int block, std::span<const int> tuple) const;
};

struct CycleProductOptions {
  SizeCap cap;
  /// Accept t = 2. Both coordinate freedoms then join the same two blocks;
  /// they are merged into one simple graph, which is (d-1)-regular rather
  /// than d-regular.
  bool allow_two_blocks = false;
};

/// t blocks U^(0..t-1), each a copy of [d/2]^t; u in U^(i) ~ v in U^(i+1 mod t)
/// iff their tuples agree except possibly at coordinate i.
/// Requires even d >= 2 and t >= 3.
TupleProduct cycle_product(int d, int t, const CycleProductOptions& options = {});

/// As cycle_product but around 3t blocks, with the free coordinate of the
/// link U^(i) -> U^(i+1) being i mod t. Requires even d >= 2 and odd t >= 3.
TupleProduct cycle_3t_product(int d, int t, const SizeCap& cap = {});

bool is_prime(int q);

/// Point-line incidence graph of PG(2, q) for prime q. Points are vertices
/// 0..N-1 and lines N..2N-1 (N = q^2+q+1), both listed as normalised
/// triples (first nonzero coordinate 1) in lexicographic order.
BipartiteOrdering projective_plane_incidence(int q, const SizeCap& cap = {});

/// Balanced bipartite product H1 ⋈ H2. The result's A-part is A1 x A2 with
/// (a1_i, a2_j) at vertex i*n2 + j; the B-part follows at offset n1*n2 in the
/// same order. The result's kind is classified from its aligned pairs.
BipartiteOrdering bbp_product(const BipartiteOrdering& h1, const BipartiteOrdering& h2, const SizeCap& cap = {});

/// Orders part_b so that a_i b_i is an edge for all i, using augmenting
/// paths with lowest-index tie-breaking. Throws NoMatching if the graph has
/// no perfect matching.
BipartiteOrdering matching_ordering(const Graph& h, std::span<const Vertex> part_a, std::span<const Vertex> part_b);

/// Orders part_b so that a_i b_i is never an edge. Throws NoComatching when
/// the bipartite complement has no perfect matching (e.g. h is complete
/// bipartite).
BipartiteOrdering comatching_ordering(const Graph& h, std::span<const Vertex> part_a,
                                      std::span<const Vertex> part_b);

/// K_{n,m}: part A is 0..n-1, part B is n..n+m-1.
Bipartition complete_bipartite(int n, int m);

/// K_{n,n} with the identity (necessarily matching) ordering.
BipartiteOrdering complete_bipartite_ordering(int n);

struct EvenEdgeOptions {
  SizeCap cap;
  /// Permit t = 4, which needs the two-block tuple construction.
  bool allow_t4 = false;
};

/// Bipartite construction whose X-Y edges form a clique in L(G)^t.
struct EvenEdgeConstruction {
  BipartiteOrdering product;  // G1 ⋈ G2
  TupleProduct factor;        // G1 before ordering
  int t = 0;
  int d = 0;
  int t1 = 0;  // t - 2
  int d1 = 0;  // (t1 - 1) d / t1
  int d2 = 0;  // d / t1
  std::vector<Vertex> x;  // U^(0) x A2
  std::vector<Vertex> y;  // U^(1) x B2

  /// Edges with one endpoint in X and the other in Y.
  std::vector<Edge> clique_edges() const;
};

/// G1 = cycle_product(d1, t-2) in block-aligned comatching ordering,
/// G2 = K_{d2,d2} matching-ordered, G = G1 ⋈ G2.
/// Requires even t >= 6 (>= 4 with allow_t4) and d divisible by 2(t-2).
EvenEdgeConstruction even_edge_construction(int d, int t, const EvenEdgeOptions& options = {});

/// Left-associated (t-1)-fold ⋈-power of K_{d',d'}, d' = (d-1)/(t-1) + 1,
/// all factors matching-ordered. Requires t >= 2, d >= 2 and
/// d ≡ 1 (mod t-1).
BipartiteOrdering iterated_product(int d, int t, const SizeCap& cap = {});

}  // namespace distcol
