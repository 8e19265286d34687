#include "distcol/graph.hpp"

#include <algorithm>
#include <string>

#include "distcol/errors.hpp"

namespace distcol {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw InvalidArgument("self-loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(Vertex n) : n_(n) {
  if (n < 0) {
    throw InvalidArgument("negative vertex count");
  }
  index_adjacency();
}

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) {
    throw InvalidArgument("negative vertex count");
  }
  for (auto& e : edges_) {
    e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= n_) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  index_adjacency();
}

void Graph::index_adjacency() {
  const auto n = static_cast<std::size_t>(n_);
  offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    offsets_[i + 1] += offsets_[i];
  }
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each list receives its smaller neighbours (as v)
  // in order, then larger neighbours (as u) in order; both passes keep lists
  // ascending.
  for (const auto& e : edges_) {
    adjacency_[fill[static_cast<std::size_t>(e.v)]++] = e.u;
  }
  for (const auto& e : edges_) {
    adjacency_[fill[static_cast<std::size_t>(e.u)]++] = e.v;
  }
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

int Graph::degree(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return static_cast<int>(offsets_[i + 1] - offsets_[i]);
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    best = std::max(best, degree(v));
  }
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) {
    return 0;
  }
  int best = degree(0);
  for (Vertex v = 1; v < n_; ++v) {
    best = std::min(best, degree(v));
  }
  return best;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    return false;
  }
  if (degree(u) > degree(v)) {
    std::swap(u, v);
  }
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v) {
    return std::nullopt;
  }
  const Edge key = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

void GraphBuilder::add_edge(Vertex a, Vertex b) {
  Edge e = make_edge(a, b);
  if (e.u < 0 || e.v >= n_) {
    throw InvalidArgument("edge endpoint outside 0.." + std::to_string(n_ - 1));
  }
  edges_.push_back(e);
}

Graph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  return Graph(n_, std::move(edges_));
}

}  // namespace distcol
