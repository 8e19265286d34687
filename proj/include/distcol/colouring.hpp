#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distcol/graph.hpp"
#include "distcol/graph_ops.hpp"

namespace distcol {

/// What a colouring colours: the graph itself (t = 1, vertex mode) or a
/// derived power / line-graph power of some base graph.
struct ColouringTarget {
  PowerMode mode = PowerMode::vertex;
  int t = 1;
};

/// Vertex -> colour map. Colours are 0-based and contiguous.
struct Colouring {
  ColouringTarget target;
  std::vector<int> colours;
  int num_colours = 0;
};

enum class GreedyOrder { natural, degeneracy, largest_first };

/// Smallest-last order: repeatedly remove a minimum-degree vertex (lowest
/// index on ties); the order is the reverse of removal.
std::vector<Vertex> degeneracy_order(const Graph& g);

Colouring greedy_colour(const Graph& g, std::span<const Vertex> order);
Colouring greedy_colour(const Graph& g, GreedyOrder heuristic = GreedyOrder::degeneracy);

/// True if adjacent vertices never share a colour and colours are in range.
bool is_proper(const Graph& g, std::span<const int> colours);

/// A maximal clique found greedily from every seed; returns the largest.
std::vector<Vertex> greedy_clique(const Graph& g);

inline constexpr Vertex kDefaultExactLimit = 64;

/// Optimal colouring by DSATUR branch-and-bound. Throws TooLarge when
/// g has more than `limit` vertices (the solver never handles more than 64).
Colouring exact_colour(const Graph& g, Vertex limit = kDefaultExactLimit);
int exact_chromatic(const Graph& g, Vertex limit = kDefaultExactLimit);

enum class Method { greedy, exact };

struct DistanceChromatic {
  int value = 0;
  Colouring colouring;  // on the derived graph
};

/// Colours power(g, t) (vertex mode) or power(line_graph(g), t) (edge mode).
DistanceChromatic distance_chromatic(const Graph& g, int t, PowerMode mode, Method method,
                                     Vertex limit = kDefaultExactLimit);

/// Outcome of a clique check in a power graph. On failure `violation` holds
/// a pair of members that are not adjacent in the power graph.
struct CliqueCertificate {
  bool is_clique = true;
  std::optional<std::pair<Vertex, Vertex>> violation;
};

/// Checks that `members` are pairwise adjacent in G^t (vertex mode, members
/// are vertices) or in L(G)^t (edge mode, members are canonical edge
/// indices) using truncated BFS per member; the power graph is never built.
CliqueCertificate verify_power_clique(const Graph& g, int t, PowerMode mode, std::span<const Vertex> members);

/// Edge-mode check with explicit edges; the violation reports edge indices.
CliqueCertificate verify_power_clique(const Graph& g, int t, std::span<const Edge> edges);

}  // namespace distcol
