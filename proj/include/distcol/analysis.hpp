#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "distcol/graph.hpp"
#include "distcol/graph_ops.hpp"
#include "distcol/random.hpp"

namespace distcol {

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Shortest odd cycle length; nullopt iff g is bipartite.
std::optional<int> odd_girth(const Graph& g);

inline constexpr int kDefaultCycleCap = 16;

/// A cycle of exactly `length` vertices (in traversal order, starting at its
/// least vertex), or nullopt if g is C_length-free. Exhaustive DFS anchored
/// at the least cycle vertex, pruned by BFS distance back to the anchor.
/// Rejects length outside 3..cap.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, int length, int cap = kDefaultCycleCap);

inline bool contains_cycle(const Graph& g, int length, int cap = kDefaultCycleCap) {
  return find_cycle(g, length, cap).has_value();
}

/// Deletes a random edge of some C_length until none remains.
Graph thin_to_cycle_free(Graph g, int length, Rng& rng, int cap = kDefaultCycleCap);
Bipartition thin_to_cycle_free(Bipartition h, int length, Rng& rng, int cap = kDefaultCycleCap);

/// Edges uv with v in part B and deg(v) >= delta, in lexicographic order.
struct BunchedEdges {
  std::size_t count = 0;
  std::vector<Edge> edges;
};

BunchedEdges bunched_edge_count(const Bipartition& h, double delta);

/// Bunched-edge bound for C_{2k}-free bipartite graphs:
/// at most delta * n_A edges are delta-bunched w.r.t. A, with
/// delta = 2(k-1) n_A^{1/k} + 16(k-1).
struct BunchedBoundCheck {
  bool holds = true;
  double delta = 0;
  std::size_t bunched = 0;
  double bound = 0;
};

double bunched_delta(int k, std::size_t n_a);

/// Throws NotCycleFree if h contains C_{2k}.
BunchedBoundCheck lemma8_bound_holds(const Bipartition& h, int k, int cap = kDefaultCycleCap);

/// ex(n, C_{2k}) <= (k-1) n^{1+1/k} + 16(k-1) n.
struct EdgeBoundCheck {
  bool holds = true;
  std::size_t edges = 0;
  double bound = 0;
};

double pikhurko_bound(int k, std::size_t n);

/// Throws NotCycleFree if g contains C_{2k}.
EdgeBoundCheck pikhurko_bound_check(const Graph& g, int k, int cap = kDefaultCycleCap);

struct DensityOptions {
  std::int64_t max_derived_vertices = 20'000;
  std::int64_t max_derived_edges = 5'000'000;
  bool per_root = false;
};

/// Neighbourhood density of the derived graph (G^t or L(G)^t).
struct DensityReport {
  int t = 1;
  PowerMode mode = PowerMode::vertex;
  std::int64_t max_degree_power = 0;  // Δ̂
  std::int64_t max_span_edges = 0;    // max over roots of e(N(v̂))
  // impliedF = Δ̂² / max_span_edges, kept as an exact fraction; the double is
  // +inf when no neighbourhood spans an edge.
  std::int64_t implied_f_numerator = 0;
  std::int64_t implied_f_denominator = 0;
  double implied_f = 0;
  std::vector<std::int64_t> per_root;  // filled when requested
};

DensityReport aks_density_profile(const Graph& g, int t, PowerMode mode, const DensityOptions& options = {});

enum class PathVariant { plain, peripheral, edge };

const char* to_string(PathVariant variant);

struct PathPairReport {
  Root root;
  int t = 0;
  PathVariant variant = PathVariant::plain;
  std::uint64_t path_count = 0;
  std::uint64_t pair_count = 0;
};

/// Simple paths of length exactly t joining two distinct vertices of A_t(root),
/// each counted once. The peripheral variant also requires every interior
/// vertex to lie in A_{>=t}.
PathPairReport path_pair_statistic(const Graph& g, Vertex root, int t, PathVariant variant);

/// Simple paths x_0 ... x_{t+1} whose end edges x_0x_1 and x_t x_{t+1} both
/// meet A_{t-1}(root), each counted once; pairs are unordered end-edge pairs.
PathPairReport edge_path_pair_statistic(const Graph& g, Edge root, int t);

/// Path-count bound for C_l-free graphs, l even >= 2t+2:
/// 26.5 l d^{2t - eps}, eps = (l - 2t)/l.
double even_vertex_path_bound(int d, int t, int ell);

/// Edge-mode bound, l even >= 2t, t >= 2:
/// (112 + 12 * 2^{2/l}) l d^{2t - eps}, eps = (l - 2t + 2)/l.
double even_edge_path_bound(int d, int t, int ell);

/// Odd-cycle pair bound, t odd, l odd >= 3t, evaluated verbatim:
/// (1 + 2kt + k0^2 + 2 sum_{i=0}^{(2k-2k0)/t} (2k0 + i t) t) d^{2t-1},
/// k = (l - 3t)/2, k0 = t if k mod t = 0 else k mod t.
double odd_vertex_pair_bound(int d, int t, int ell);

struct TheoremCheck {
  bool holds = true;
  bool experimental = false;  // odd-l vertex case
  PathVariant statistic = PathVariant::plain;
  int max_degree = 0;
  double epsilon = 0;
  double bound = 0;
  std::uint64_t max_count = 0;
  double worst_margin = 0;  // bound - max_count
  std::optional<Root> worst_root;
};

/// Checks every root's path count against the explicit constant for
/// (t, l, mode). Vertex mode with even l uses plain paths, odd l uses
/// peripheral paths (experimental); edge mode needs even l.
/// Throws InvalidArgument on parity/range violations and NotCycleFree if g
/// contains C_l.
TheoremCheck theorem_constant_check(const Graph& g, int t, int ell, PowerMode mode, int cap = kDefaultCycleCap);

}  // namespace distcol
