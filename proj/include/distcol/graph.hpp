#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace distcol {

using Vertex = std::int32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orders the endpoints; rejects self-loops.
Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on the vertices 0..n-1.
///
/// Edges are kept in lexicographic order of (min endpoint, max endpoint);
/// the position of an edge in `edges()` is its canonical index, which is
/// also its vertex id in `line_graph`. Neighbour lists are sorted.
/// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  /// Strict constructor: throws InvalidArgument on self-loops, duplicate
  /// edges or endpoints outside 0..n-1. Use GraphBuilder to collapse
  /// duplicates instead.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  int min_degree() const;
  bool is_regular() const;

  bool adjacent(Vertex u, Vertex v) const;
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index_adjacency();

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Accumulates edges, silently collapsing duplicates.
class GraphBuilder {
 public:
  explicit GraphBuilder(Vertex n) : n_(n) {}

  void add_edge(Vertex a, Vertex b);
  void reserve(std::size_t m) { edges_.reserve(m); }
  Vertex num_vertices() const { return n_; }

  Graph build() &&;

 private:
  Vertex n_;
  std::vector<Edge> edges_;
};

}  // namespace distcol
