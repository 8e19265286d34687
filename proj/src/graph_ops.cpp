#include "distcol/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "distcol/errors.hpp"

namespace distcol {

TruncatedBfs::TruncatedBfs(const Graph& g)
    : g_(&g),
      dist_(static_cast<std::size_t>(g.num_vertices()), 0),
      stamp_(static_cast<std::size_t>(g.num_vertices()), 0) {}

std::span<const Vertex> TruncatedBfs::run(std::span<const Vertex> sources, int max_depth) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  order_.clear();
  for (Vertex s : sources) {
    const auto i = static_cast<std::size_t>(s);
    if (stamp_[i] != epoch_) {
      stamp_[i] = epoch_;
      dist_[i] = 0;
      order_.push_back(s);
    }
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex v = order_[head];
    const int dv = dist_[static_cast<std::size_t>(v)];
    if (max_depth >= 0 && dv >= max_depth) {
      continue;
    }
    for (Vertex w : g_->neighbours(v)) {
      const auto j = static_cast<std::size_t>(w);
      if (stamp_[j] != epoch_) {
        stamp_[j] = epoch_;
        dist_[j] = dv + 1;
        order_.push_back(w);
      }
    }
  }
  return order_;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  TruncatedBfs bfs(g);
  const Vertex src[] = {source};
  bfs.run(src, -1);
  std::vector<int> out(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out[static_cast<std::size_t>(v)] = bfs.distance(v);
  }
  return out;
}

Graph power(const Graph& g, int t) {
  if (t < 1) {
    throw InvalidArgument("power requires t >= 1, got " + std::to_string(t));
  }
  if (t == 1) {
    return g;
  }
  GraphBuilder out(g.num_vertices());
  TruncatedBfs bfs(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Vertex src[] = {v};
    for (Vertex w : bfs.run(src, t)) {
      if (w > v) {
        out.add_edge(v, w);
      }
    }
  }
  return std::move(out).build();
}

Graph line_graph(const Graph& g) {
  const auto m = g.num_edges();
  GraphBuilder out(static_cast<Vertex>(m));
  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.num_vertices()));
  auto edges = g.edges();
  for (std::size_t i = 0; i < m; ++i) {
    incident[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<Vertex>(i));
    incident[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<Vertex>(i));
  }
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        out.add_edge(list[a], list[b]);
      }
    }
  }
  return std::move(out).build();
}

Graph derived_graph(const Graph& g, int t, PowerMode mode) {
  return mode == PowerMode::vertex ? power(g, t) : power(line_graph(g), t);
}

std::span<const Vertex> LayerDecomposition::layer(std::size_t i) const {
  if (i >= layers.size()) {
    return {};
  }
  return layers[i];
}

LayerDecomposition bfs_layers(const Graph& g, Root root) {
  std::vector<Vertex> sources;
  if (const auto* x = std::get_if<Vertex>(&root)) {
    if (*x < 0 || *x >= g.num_vertices()) {
      throw InvalidArgument("root vertex " + std::to_string(*x) + " out of range");
    }
    sources = {*x};
  } else {
    const Edge e = std::get<Edge>(root);
    if (!g.edge_index(e.u, e.v)) {
      throw InvalidArgument("root edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not an edge of the graph");
    }
    root = make_edge(e.u, e.v);
    sources = {std::min(e.u, e.v), std::max(e.u, e.v)};
  }

  LayerDecomposition out;
  out.root = root;
  const auto n = static_cast<std::size_t>(g.num_vertices());
  out.layer_of.assign(n, -1);
  out.parent.assign(n, -1);

  TruncatedBfs bfs(g);
  for (Vertex v : bfs.run(sources, -1)) {
    const int d = bfs.distance(v);
    out.layer_of[static_cast<std::size_t>(v)] = d;
    if (static_cast<std::size_t>(d) >= out.layers.size()) {
      out.layers.resize(static_cast<std::size_t>(d) + 1);
    }
    out.layers[static_cast<std::size_t>(d)].push_back(v);
  }
  for (auto& layer : out.layers) {
    std::sort(layer.begin(), layer.end());
  }
  for (std::size_t i = 1; i < out.layers.size(); ++i) {
    for (Vertex v : out.layers[i]) {
      for (Vertex w : g.neighbours(v)) {
        if (out.layer_of[static_cast<std::size_t>(w)] == static_cast<int>(i) - 1) {
          out.parent[static_cast<std::size_t>(v)] = w;
          break;
        }
      }
    }
  }
  return out;
}

void validate_bipartition(const Bipartition& h) {
  const auto n = static_cast<std::size_t>(h.graph.num_vertices());
  std::vector<int> side(n, -1);
  auto assign = [&](std::span<const Vertex> part, int s) {
    for (Vertex v : part) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw NotBipartite("part member " + std::to_string(v) + " is not a vertex");
      }
      if (side[static_cast<std::size_t>(v)] != -1) {
        throw NotBipartite("vertex " + std::to_string(v) + " appears twice in the parts");
      }
      side[static_cast<std::size_t>(v)] = s;
    }
  };
  assign(h.part_a, 0);
  assign(h.part_b, 1);
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw NotBipartite("parts do not cover the vertex set");
  }
  for (const auto& e : h.graph.edges()) {
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
      throw NotBipartite("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} lies inside a part");
    }
  }
}

std::optional<std::vector<int>> two_colouring(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) {
      continue;
    }
    colour[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const int cv = colour[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbours(v)) {
        int& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - cv;
          queue.push_back(w);
        } else if (cw == cv) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

LayerBipartite layer_bipartite(const Graph& g, const LayerDecomposition& layers, std::size_t i) {
  if (i + 1 >= layers.num_layers()) {
    throw InvalidArgument("layer index " + std::to_string(i) + " needs layers " + std::to_string(i) + " and " +
                          std::to_string(i + 1) + " but only " + std::to_string(layers.num_layers()) + " exist");
  }
  const auto& upper = layers.layers[i];
  const auto& lower = layers.layers[i + 1];
  LayerBipartite out;
  out.original.reserve(upper.size() + lower.size());
  out.original.insert(out.original.end(), upper.begin(), upper.end());
  out.original.insert(out.original.end(), lower.begin(), lower.end());

  const auto na = static_cast<Vertex>(upper.size());
  GraphBuilder b(static_cast<Vertex>(out.original.size()));
  for (Vertex a = 0; a < na; ++a) {
    for (Vertex w : g.neighbours(upper[static_cast<std::size_t>(a)])) {
      if (layers.layer_of[static_cast<std::size_t>(w)] == static_cast<int>(i) + 1) {
        auto pos = std::lower_bound(lower.begin(), lower.end(), w) - lower.begin();
        b.add_edge(a, na + static_cast<Vertex>(pos));
      }
    }
  }
  out.local.graph = std::move(b).build();
  for (Vertex a = 0; a < na; ++a) {
    out.local.part_a.push_back(a);
  }
  for (Vertex k = na; k < static_cast<Vertex>(out.original.size()); ++k) {
    out.local.part_b.push_back(k);
  }
  return out;
}

}  // namespace distcol
