#include "distcol/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "distcol/errors.hpp"

namespace distcol {

std::optional<int> girth(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::optional<int> best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const int dv = dist[static_cast<std::size_t>(v)];
      // No shorter cycle through s can be found past this depth.
      if (best && 2 * dv + 1 >= *best) {
        break;
      }
      for (Vertex w : g.neighbours(v)) {
        const auto j = static_cast<std::size_t>(w);
        if (dist[j] < 0) {
          dist[j] = dv + 1;
          parent[j] = v;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(v)]) {
          const int len = dv + dist[j] + 1;
          if (!best || len < *best) {
            best = len;
          }
        }
      }
    }
  }
  return best;
}

std::optional<int> odd_girth(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::optional<int> best;
  std::vector<int> dist(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const int dv = dist[static_cast<std::size_t>(v)];
      if (best && 2 * dv + 1 >= *best) {
        break;
      }
      for (Vertex w : g.neighbours(v)) {
        const auto j = static_cast<std::size_t>(w);
        if (dist[j] < 0) {
          dist[j] = dv + 1;
          queue.push_back(w);
        } else if (dist[j] == dv) {
          best = 2 * dv + 1;
        }
      }
    }
  }
  return best;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int length)
      : g_(g),
        length_(length),
        dist_(static_cast<std::size_t>(g.num_vertices())),
        on_path_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 0; s < g_.num_vertices(); ++s) {
      if (anchor(s)) {
        return path_;
      }
    }
    return std::nullopt;
  }

 private:
  // Distances from s inside the subgraph induced by vertices >= s.
  void restricted_bfs(Vertex s) {
    std::fill(dist_.begin(), dist_.end(), -1);
    std::vector<Vertex> queue{s};
    dist_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const int dv = dist_[static_cast<std::size_t>(v)];
      if (2 * dv >= length_) {
        continue;
      }
      for (Vertex w : g_.neighbours(v)) {
        if (w > s && dist_[static_cast<std::size_t>(w)] < 0) {
          dist_[static_cast<std::size_t>(w)] = dv + 1;
          queue.push_back(w);
        }
      }
    }
  }

  bool anchor(Vertex s) {
    int up = 0;
    for (Vertex w : g_.neighbours(s)) {
      up += w > s ? 1 : 0;
    }
    if (up < 2) {
      return false;
    }
    restricted_bfs(s);
    anchor_ = s;
    path_.assign(1, s);
    on_path_[static_cast<std::size_t>(s)] = 1;
    const bool found = extend();
    on_path_[static_cast<std::size_t>(s)] = 0;
    if (!found) {
      for (Vertex v : path_) {
        on_path_[static_cast<std::size_t>(v)] = 0;
      }
    }
    return found;
  }

  bool extend() {
    const Vertex v = path_.back();
    const int edges_used = static_cast<int>(path_.size()) - 1;
    if (edges_used == length_ - 1) {
      // Closing edge back to the anchor; the second vertex is kept below the
      // last one so each cycle is met in one direction only.
      return g_.adjacent(v, anchor_) && path_[1] < v;
    }
    const int remaining = length_ - edges_used - 1;
    for (Vertex w : g_.neighbours(v)) {
      const auto j = static_cast<std::size_t>(w);
      if (w <= anchor_ || on_path_[j] || dist_[j] < 0 || dist_[j] > remaining) {
        continue;
      }
      path_.push_back(w);
      on_path_[j] = 1;
      if (extend()) {
        return true;
      }
      on_path_[j] = 0;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int length_;
  Vertex anchor_ = 0;
  std::vector<int> dist_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return out;
}

Graph without_edge(const Graph& g, Edge drop) {
  std::vector<Edge> kept;
  kept.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    if (e != drop) {
      kept.push_back(e);
    }
  }
  return Graph(g.num_vertices(), std::move(kept));
}

}  // namespace

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, int length, int cap) {
  if (length < 3 || length > cap) {
    throw InvalidArgument("cycle length must lie in 3.." + std::to_string(cap) + ", got " + std::to_string(length));
  }
  return CycleSearch(g, length).run();
}

Graph thin_to_cycle_free(Graph g, int length, Rng& rng, int cap) {
  while (auto cycle = find_cycle(g, length, cap)) {
    const auto edges = cycle_edges(*cycle);
    g = without_edge(g, edges[static_cast<std::size_t>(uniform_below(rng, edges.size()))]);
  }
  return g;
}

Bipartition thin_to_cycle_free(Bipartition h, int length, Rng& rng, int cap) {
  h.graph = thin_to_cycle_free(std::move(h.graph), length, rng, cap);
  return h;
}

BunchedEdges bunched_edge_count(const Bipartition& h, double delta) {
  validate_bipartition(h);
  BunchedEdges out;
  for (Vertex b : h.part_b) {
    // Ties count: "degree at least delta".
    if (static_cast<double>(h.graph.degree(b)) >= delta) {
      for (Vertex a : h.graph.neighbours(b)) {
        out.edges.push_back(make_edge(a, b));
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.count = out.edges.size();
  return out;
}

double bunched_delta(int k, std::size_t n_a) {
  return 2.0 * (k - 1) * std::pow(static_cast<double>(n_a), 1.0 / k) + 16.0 * (k - 1);
}

BunchedBoundCheck lemma8_bound_holds(const Bipartition& h, int k, int cap) {
  if (k < 2) {
    throw InvalidArgument("k must be >= 2");
  }
  validate_bipartition(h);
  if (h.part_a.empty()) {
    throw InvalidArgument("part A must be non-empty");
  }
  if (auto cycle = find_cycle(h.graph, 2 * k, cap)) {
    throw NotCycleFree("graph contains C_" + std::to_string(2 * k));
  }
  BunchedBoundCheck out;
  out.delta = bunched_delta(k, h.part_a.size());
  out.bunched = bunched_edge_count(h, out.delta).count;
  out.bound = out.delta * static_cast<double>(h.part_a.size());
  out.holds = static_cast<double>(out.bunched) <= out.bound;
  return out;
}

double pikhurko_bound(int k, std::size_t n) {
  const double nn = static_cast<double>(n);
  return (k - 1) * std::pow(nn, 1.0 + 1.0 / k) + 16.0 * (k - 1) * nn;
}

EdgeBoundCheck pikhurko_bound_check(const Graph& g, int k, int cap) {
  if (k < 2) {
    throw InvalidArgument("k must be >= 2");
  }
  if (auto cycle = find_cycle(g, 2 * k, cap)) {
    throw NotCycleFree("graph contains C_" + std::to_string(2 * k));
  }
  EdgeBoundCheck out;
  out.edges = g.num_edges();
  out.bound = pikhurko_bound(k, static_cast<std::size_t>(g.num_vertices()));
  out.holds = static_cast<double>(out.edges) <= out.bound;
  return out;
}

DensityReport aks_density_profile(const Graph& g, int t, PowerMode mode, const DensityOptions& options) {
  const std::int64_t derived_n =
      mode == PowerMode::vertex ? g.num_vertices() : static_cast<std::int64_t>(g.num_edges());
  if (derived_n > options.max_derived_vertices) {
    throw TooLarge("derived graph would have " + std::to_string(derived_n) + " vertices, above the cap of " +
                   std::to_string(options.max_derived_vertices));
  }
  const Graph h = derived_graph(g, t, mode);
  if (static_cast<std::int64_t>(h.num_edges()) > options.max_derived_edges) {
    throw TooLarge("derived graph has " + std::to_string(h.num_edges()) + " edges, above the cap of " +
                   std::to_string(options.max_derived_edges));
  }

  DensityReport out;
  out.t = t;
  out.mode = mode;
  out.max_degree_power = h.max_degree();
  std::vector<std::uint32_t> mark(static_cast<std::size_t>(h.num_vertices()), 0);
  std::uint32_t stamp = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    ++stamp;
    for (Vertex u : h.neighbours(v)) {
      mark[static_cast<std::size_t>(u)] = stamp;
    }
    std::int64_t span = 0;
    for (Vertex u : h.neighbours(v)) {
      for (Vertex w : h.neighbours(u)) {
        if (w > u && mark[static_cast<std::size_t>(w)] == stamp) {
          ++span;
        }
      }
    }
    out.max_span_edges = std::max(out.max_span_edges, span);
    if (options.per_root) {
      out.per_root.push_back(span);
    }
  }
  out.implied_f_numerator = out.max_degree_power * out.max_degree_power;
  out.implied_f_denominator = out.max_span_edges;
  out.implied_f = out.max_span_edges == 0
                      ? std::numeric_limits<double>::infinity()
                      : static_cast<double>(out.implied_f_numerator) / static_cast<double>(out.max_span_edges);
  return out;
}

const char* to_string(PathVariant variant) {
  switch (variant) {
    case PathVariant::plain:
      return "plain";
    case PathVariant::peripheral:
      return "peripheral";
    case PathVariant::edge:
      break;
  }
  return "edge";
}

namespace {

// Enumerates simple paths with a fixed number of edges, pruning any vertex
// whose BFS layer cannot be on such a path. `admit(position, vertex)` is the
// per-position filter; `finish(path)` is called on complete paths.
template <typename Admit, typename Finish>
void enumerate_paths(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on_path, int edges_left,
                     Admit& admit, Finish& finish) {
  if (edges_left == 0) {
    finish(path);
    return;
  }
  const Vertex v = path.back();
  for (Vertex w : g.neighbours(v)) {
    const auto j = static_cast<std::size_t>(w);
    if (on_path[j] || !admit(static_cast<int>(path.size()), w)) {
      continue;
    }
    on_path[j] = 1;
    path.push_back(w);
    enumerate_paths(g, path, on_path, edges_left - 1, admit, finish);
    path.pop_back();
    on_path[j] = 0;
  }
}

}  // namespace

PathPairReport path_pair_statistic(const Graph& g, Vertex root, int t, PathVariant variant) {
  if (t < 1) {
    throw InvalidArgument("t must be >= 1");
  }
  if (variant == PathVariant::edge) {
    throw InvalidArgument("use edge_path_pair_statistic for the edge variant");
  }
  const auto layers = bfs_layers(g, root);
  PathPairReport out{root, t, variant, 0, 0};
  const auto targets = layers.layer(static_cast<std::size_t>(t));
  if (targets.size() < 2) {
    return out;
  }

  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> reached_stamp(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<Vertex> path;
  for (Vertex s : targets) {
    // Layers move by at most one per step, so the vertex at position k lies
    // within min(k, t-k) layers of t.
    auto admit = [&](int pos, Vertex w) {
      const int layer = layers.layer_of[static_cast<std::size_t>(w)];
      if (std::abs(layer - t) > std::min(pos, t - pos)) {
        return false;
      }
      return !(variant == PathVariant::peripheral && pos < t && layer < t);
    };
    auto finish = [&](const std::vector<Vertex>& p) {
      const Vertex end = p.back();
      if (end <= s) {
        return;
      }
      ++out.path_count;
      if (reached_stamp[static_cast<std::size_t>(end)] != s) {
        reached_stamp[static_cast<std::size_t>(end)] = s;
        ++out.pair_count;
      }
    };
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    enumerate_paths(g, path, on_path, t, admit, finish);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

PathPairReport edge_path_pair_statistic(const Graph& g, Edge root, int t) {
  if (t < 2) {
    throw InvalidArgument("edge path statistic needs t >= 2");
  }
  const auto layers = bfs_layers(g, root);
  PathPairReport out{make_edge(root.u, root.v), t, PathVariant::edge, 0, 0};
  const int target = t - 1;
  auto layer = [&](Vertex v) { return layers.layer_of[static_cast<std::size_t>(v)]; };
  auto qualifies = [&](Vertex a, Vertex b) { return layer(a) == target || layer(b) == target; };

  std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<std::size_t> pair_stamp(g.num_edges(), std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> path;
  const auto edges = g.edges();
  for (std::size_t first = 0; first < edges.size(); ++first) {
    const Edge f = edges[first];
    if (!qualifies(f.u, f.v)) {
      continue;
    }
    // Either x_0 or x_1 is in A_{t-1}, so x_j is within j layers of t-1; from
    // the other end edge, within max(1, t+1-j).
    auto admit = [&](int pos, Vertex w) {
      const int lw = layer(w);
      return lw >= 0 && std::abs(lw - target) <= std::min(pos, std::max(1, t + 1 - pos));
    };
    auto finish = [&](const std::vector<Vertex>& p) {
      const Vertex a = p[p.size() - 2];
      const Vertex b = p.back();
      if (!qualifies(a, b)) {
        return;
      }
      const std::size_t last = *g.edge_index(a, b);
      if (last <= first) {
        return;
      }
      ++out.path_count;
      if (pair_stamp[last] != first) {
        pair_stamp[last] = first;
        ++out.pair_count;
      }
    };
    for (const auto& [x0, x1] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
      path.assign({x0, x1});
      on_path[static_cast<std::size_t>(x0)] = 1;
      on_path[static_cast<std::size_t>(x1)] = 1;
      enumerate_paths(g, path, on_path, t, admit, finish);
      on_path[static_cast<std::size_t>(x0)] = 0;
      on_path[static_cast<std::size_t>(x1)] = 0;
    }
  }
  return out;
}

double even_vertex_path_bound(int d, int t, int ell) {
  const double eps = static_cast<double>(ell - 2 * t) / ell;
  return 26.5 * ell * std::pow(static_cast<double>(d), 2.0 * t - eps);
}

double even_edge_path_bound(int d, int t, int ell) {
  const double eps = static_cast<double>(ell - 2 * t + 2) / ell;
  return (112.0 + 12.0 * std::pow(2.0, 2.0 / ell)) * ell * std::pow(static_cast<double>(d), 2.0 * t - eps);
}

double odd_vertex_pair_bound(int d, int t, int ell) {
  const int k = (ell - 3 * t) / 2;
  const int k0 = k % t == 0 ? t : k % t;
  double sum = 0;
  const int top = 2 * k - 2 * k0;
  if (top >= 0) {
    for (int i = 0; i <= top / t; ++i) {
      sum += static_cast<double>(2 * k0 + i * t) * t;
    }
  }
  const double constant = 1.0 + 2.0 * k * t + static_cast<double>(k0) * k0 + 2.0 * sum;
  return constant * std::pow(static_cast<double>(d), 2.0 * t - 1);
}

TheoremCheck theorem_constant_check(const Graph& g, int t, int ell, PowerMode mode, int cap) {
  TheoremCheck out;
  out.max_degree = g.max_degree();
  if (out.max_degree < 2) {
    throw InvalidArgument("maximum degree must be >= 2");
  }
  const int d = out.max_degree;
  if (mode == PowerMode::vertex) {
    if (t < 1) {
      throw InvalidArgument("t must be >= 1");
    }
    if (ell % 2 == 0) {
      if (ell < 2 * t + 2) {
        throw InvalidArgument("even l must be >= 2t+2 in vertex mode");
      }
      out.epsilon = static_cast<double>(ell - 2 * t) / ell;
      out.bound = even_vertex_path_bound(d, t, ell);
      out.statistic = PathVariant::plain;
    } else {
      if (t % 2 == 0 || ell < 3 * t) {
        throw InvalidArgument("odd l needs odd t and l >= 3t");
      }
      out.epsilon = 1.0;
      out.bound = odd_vertex_pair_bound(d, t, ell);
      out.statistic = PathVariant::peripheral;
      out.experimental = true;
    }
  } else {
    if (ell % 2 != 0) {
      throw InvalidArgument("edge mode needs even l");
    }
    if (t < 2 || ell < 2 * t) {
      throw InvalidArgument("edge mode needs t >= 2 and l >= 2t");
    }
    out.epsilon = static_cast<double>(ell - 2 * t + 2) / ell;
    out.bound = even_edge_path_bound(d, t, ell);
    out.statistic = PathVariant::edge;
  }
  if (find_cycle(g, ell, cap)) {
    throw NotCycleFree("graph contains C_" + std::to_string(ell));
  }

  auto consider = [&](const PathPairReport& r) {
    if (!out.worst_root || r.path_count > out.max_count) {
      out.max_count = r.path_count;
      out.worst_root = r.root;
    }
  };
  if (mode == PowerMode::vertex) {
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      consider(path_pair_statistic(g, x, t, out.statistic));
    }
  } else {
    for (const auto& e : g.edges()) {
      consider(edge_path_pair_statistic(g, e, t));
    }
  }
  out.worst_margin = out.bound - static_cast<double>(out.max_count);
  out.holds = static_cast<double>(out.max_count) <= out.bound;
  return out;
}

}  // namespace distcol
