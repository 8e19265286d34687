#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "distcol/graph.hpp"

namespace distcol {

/// Which derived graph a distance-t statistic lives on: the vertex power
/// G^t or the line-graph power L(G)^t.
enum class PowerMode { vertex, edge };

/// G^t: u ~ v iff 1 <= dist_G(u, v) <= t. Rejects t < 1.
Graph power(const Graph& g, int t);

/// L(G). Vertex i of the result is edge i of `g.edges()`.
Graph line_graph(const Graph& g);

/// power(g, t) or power(line_graph(g), t) depending on `mode`.
Graph derived_graph(const Graph& g, int t, PowerMode mode);

/// Breadth-first search bounded by depth, reusable across many runs on the
/// same graph without reallocating.
class TruncatedBfs {
 public:
  explicit TruncatedBfs(const Graph& g);

  /// Explores from `sources` (distance 0) out to `max_depth` (negative means
  /// unbounded). Returns the reached vertices in BFS order.
  std::span<const Vertex> run(std::span<const Vertex> sources, int max_depth);

  /// Distance found by the last run, or -1 if not reached.
  int distance(Vertex v) const {
    return stamp_[static_cast<std::size_t>(v)] == epoch_ ? dist_[static_cast<std::size_t>(v)] : -1;
  }

 private:
  const Graph* g_;
  std::vector<int> dist_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> order_;
};

/// Single-source distances (-1 for unreachable).
std::vector<int> distances_from(const Graph& g, Vertex source);

using Root = std::variant<Vertex, Edge>;

/// BFS layers A_0, A_1, ... from a vertex or an edge, with the canonical BFS
/// tree: the parent of v in A_i (i > 0) is its least-index neighbour in
/// A_{i-1}.
struct LayerDecomposition {
  Root root;
  std::vector<std::vector<Vertex>> layers;  // each sorted ascending
  std::vector<int> layer_of;                // -1 when unreachable
  std::vector<Vertex> parent;               // -1 for A_0 and unreachable

  std::size_t num_layers() const { return layers.size(); }
  std::span<const Vertex> layer(std::size_t i) const;
};

LayerDecomposition bfs_layers(const Graph& g, Root root);

/// A graph together with a bipartition of its vertex set. Parts need not be
/// balanced.
struct Bipartition {
  Graph graph;
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
};

/// Throws NotBipartite unless the parts partition the vertex set and no edge
/// lies inside a part.
void validate_bipartition(const Bipartition& h);

/// Proper 2-colouring (0/1 per vertex) when one exists.
std::optional<std::vector<int>> two_colouring(const Graph& g);
bool is_bipartite(const Graph& g);

/// G_i = G[A_i, A_{i+1}] renumbered locally: A_i gets 0..|A_i|-1 in
/// ascending order, A_{i+1} follows. `original[k]` maps back to G.
struct LayerBipartite {
  Bipartition local;
  std::vector<Vertex> original;
};

LayerBipartite layer_bipartite(const Graph& g, const LayerDecomposition& layers, std::size_t i);

}  // namespace distcol
