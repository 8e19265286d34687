#include "distcol/colouring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "distcol/errors.hpp"

namespace distcol {

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      const auto j = static_cast<std::size_t>(w);
      if (!removed[j]) {
        queue.erase({degree[j], w});
        queue.emplace(--degree[j], w);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

Colouring greedy_colour(const Graph& g, std::span<const Vertex> order) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (order.size() != n) {
    throw InvalidArgument("greedy order must list every vertex once");
  }
  Colouring out;
  out.colours.assign(n, -1);
  std::vector<std::size_t> mark(n + 1, 0);
  std::size_t stamp = 0;
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || out.colours[static_cast<std::size_t>(v)] != -1) {
      throw InvalidArgument("greedy order must list every vertex once");
    }
    ++stamp;
    for (Vertex w : g.neighbours(v)) {
      const int c = out.colours[static_cast<std::size_t>(w)];
      if (c >= 0) {
        mark[static_cast<std::size_t>(c)] = stamp;
      }
    }
    int c = 0;
    while (mark[static_cast<std::size_t>(c)] == stamp) {
      ++c;
    }
    out.colours[static_cast<std::size_t>(v)] = c;
    out.num_colours = std::max(out.num_colours, c + 1);
  }
  return out;
}

Colouring greedy_colour(const Graph& g, GreedyOrder heuristic) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    order[static_cast<std::size_t>(v)] = v;
  }
  switch (heuristic) {
    case GreedyOrder::natural:
      break;
    case GreedyOrder::degeneracy:
      order = degeneracy_order(g);
      break;
    case GreedyOrder::largest_first:
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
      break;
  }
  return greedy_colour(g, order);
}

bool is_proper(const Graph& g, std::span<const int> colours) {
  if (colours.size() != static_cast<std::size_t>(g.num_vertices())) {
    return false;
  }
  if (std::any_of(colours.begin(), colours.end(), [](int c) { return c < 0; })) {
    return false;
  }
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return colours[static_cast<std::size_t>(e.u)] == colours[static_cast<std::size_t>(e.v)];
  });
}

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> best;
  for (Vertex seed = 0; seed < g.num_vertices(); ++seed) {
    if (g.degree(seed) + 1 <= static_cast<int>(best.size())) {
      continue;
    }
    std::vector<Vertex> clique{seed};
    auto nb = g.neighbours(seed);
    std::vector<Vertex> candidates(nb.begin(), nb.end());
    while (!candidates.empty()) {
      // Take the candidate with the most neighbours among the candidates.
      Vertex pick = candidates.front();
      int pick_score = -1;
      for (Vertex c : candidates) {
        int score = 0;
        for (Vertex w : candidates) {
          score += g.adjacent(c, w) ? 1 : 0;
        }
        if (score > pick_score) {
          pick = c;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::erase_if(candidates, [&](Vertex c) { return c == pick || !g.adjacent(c, pick); });
    }
    if (clique.size() > best.size()) {
      std::sort(clique.begin(), clique.end());
      best = std::move(clique);
    }
  }
  return best;
}

namespace {

class DsaturSolver {
 public:
  DsaturSolver(const Graph& g, std::vector<int> incumbent, int incumbent_count)
      : n_(static_cast<int>(g.num_vertices())),
        adj_(static_cast<std::size_t>(n_), 0),
        degree_(static_cast<std::size_t>(n_), 0),
        colour_(static_cast<std::size_t>(n_), -1),
        neighbour_colours_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0),
        saturation_(static_cast<std::size_t>(n_), 0),
        best_(std::move(incumbent)),
        best_count_(incumbent_count) {
    for (const auto& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    for (int v = 0; v < n_; ++v) {
      degree_[static_cast<std::size_t>(v)] = std::popcount(adj_[static_cast<std::size_t>(v)]);
    }
  }

  void solve(std::span<const Vertex> clique) {
    lower_bound_ = static_cast<int>(clique.size());
    if (best_count_ <= lower_bound_) {
      return;
    }
    int used = 0;
    for (Vertex v : clique) {
      assign(v, used++);
    }
    search(static_cast<int>(clique.size()), used);
  }

  const std::vector<int>& best() const { return best_; }
  int best_count() const { return best_count_; }

 private:
  int& count(int v, int c) { return neighbour_colours_[static_cast<std::size_t>(v * n_ + c)]; }

  void assign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (count(w, c)++ == 0) {
        ++saturation_[static_cast<std::size_t>(w)];
      }
    }
  }

  void unassign(int v) {
    const int c = colour_[static_cast<std::size_t>(v)];
    colour_[static_cast<std::size_t>(v)] = -1;
    for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (--count(w, c) == 0) {
        --saturation_[static_cast<std::size_t>(w)];
      }
    }
  }

  int pick_vertex() const {
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] != -1) {
        continue;
      }
      const int sat = saturation_[static_cast<std::size_t>(v)];
      const int deg = degree_[static_cast<std::size_t>(v)];
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    return pick;
  }

  // Returns true once an optimal colouring (matching the lower bound) is known.
  bool search(int coloured, int used) {
    if (used >= best_count_) {
      return false;
    }
    if (coloured == n_) {
      best_ = colour_;
      best_count_ = used;
      return best_count_ <= lower_bound_;
    }
    const int v = pick_vertex();
    // A new colour is only worth opening if it still beats the incumbent.
    const int max_colour = std::min(used, best_count_ - 2);
    for (int c = 0; c <= max_colour; ++c) {
      if (count(v, c) != 0) {
        continue;
      }
      assign(v, c);
      const bool done = search(coloured + 1, std::max(used, c + 1));
      unassign(v);
      if (done) {
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<int> colour_;
  std::vector<int> neighbour_colours_;
  std::vector<int> saturation_;
  std::vector<int> best_;
  int best_count_;
  int lower_bound_ = 0;
};

}  // namespace

Colouring exact_colour(const Graph& g, Vertex limit) {
  limit = std::min(limit, Vertex{64});
  if (g.num_vertices() > limit) {
    throw TooLarge("exact colouring limited to " + std::to_string(limit) + " vertices, graph has " +
                   std::to_string(g.num_vertices()));
  }
  Colouring greedy = greedy_colour(g, GreedyOrder::degeneracy);
  if (g.num_vertices() == 0) {
    return greedy;
  }
  const auto clique = greedy_clique(g);
  DsaturSolver solver(g, greedy.colours, greedy.num_colours);
  solver.solve(clique);
  return {{}, solver.best(), solver.best_count()};
}

int exact_chromatic(const Graph& g, Vertex limit) { return exact_colour(g, limit).num_colours; }

DistanceChromatic distance_chromatic(const Graph& g, int t, PowerMode mode, Method method, Vertex limit) {
  const Graph derived = derived_graph(g, t, mode);
  DistanceChromatic out;
  out.colouring = method == Method::exact ? exact_colour(derived, limit) : greedy_colour(derived);
  out.colouring.target = {mode, t};
  out.value = out.colouring.num_colours;
  return out;
}

namespace {

CliqueCertificate check_sources(const Graph& g, int depth, const std::vector<std::vector<Vertex>>& sources,
                                std::span<const Vertex> labels) {
  TruncatedBfs bfs(g);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    bfs.run(sources[i], depth);
    for (std::size_t j = i + 1; j < sources.size(); ++j) {
      const bool near = std::any_of(sources[j].begin(), sources[j].end(), [&](Vertex v) { return bfs.distance(v) >= 0; });
      if (!near) {
        return {false, std::pair{labels[i], labels[j]}};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Vertex> unique_members(std::span<const Vertex> members) {
  std::vector<Vertex> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CliqueCertificate verify_power_clique(const Graph& g, int t, PowerMode mode, std::span<const Vertex> members) {
  if (t < 1) {
    throw InvalidArgument("t must be >= 1");
  }
  const auto unique = unique_members(members);
  if (mode == PowerMode::vertex) {
    std::vector<std::vector<Vertex>> sources;
    for (Vertex v : unique) {
      if (v < 0 || v >= g.num_vertices()) {
        throw InvalidArgument("clique member " + std::to_string(v) + " is not a vertex");
      }
      sources.push_back({v});
    }
    return check_sources(g, t, sources, unique);
  }
  std::vector<Edge> edges;
  for (Vertex idx : unique) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= g.num_edges()) {
      throw InvalidArgument("clique member " + std::to_string(idx) + " is not an edge index");
    }
    edges.push_back(g.edges()[static_cast<std::size_t>(idx)]);
  }
  return verify_power_clique(g, t, edges);
}

CliqueCertificate verify_power_clique(const Graph& g, int t, std::span<const Edge> edges) {
  if (t < 1) {
    throw InvalidArgument("t must be >= 1");
  }
  std::vector<Vertex> labels;
  for (const auto& e : edges) {
    auto idx = g.edge_index(e.u, e.v);
    if (!idx) {
      throw InvalidArgument("clique member {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    }
    labels.push_back(static_cast<Vertex>(*idx));
  }
  labels = unique_members(labels);
  // Distinct edges e, f are within distance t in L(G) iff some endpoint of f
  // lies within distance t-1 of an endpoint of e in G.
  std::vector<std::vector<Vertex>> sources;
  for (Vertex idx : labels) {
    const Edge e = g.edges()[static_cast<std::size_t>(idx)];
    sources.push_back({e.u, e.v});
  }
  return check_sources(g, t - 1, sources, labels);
}

}  // namespace distcol
