#include "distcol/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "distcol/errors.hpp"

namespace distcol {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidArgument("uniform_below needs a positive bound");
  }
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) {
    x = rng();
  }
  return x % bound;
}

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) {
    throw InvalidArgument("uniform_int with empty range");
  }
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

bool bernoulli(Rng& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

Graph random_graph(Vertex n, double p, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

Bipartition random_bipartite(int na, int nb, double p, Rng& rng) {
  GraphBuilder b(na + nb);
  Bipartition out;
  for (Vertex a = 0; a < na; ++a) {
    out.part_a.push_back(a);
    for (Vertex k = 0; k < nb; ++k) {
      if (bernoulli(rng, p)) {
        b.add_edge(a, na + k);
      }
    }
  }
  for (Vertex k = 0; k < nb; ++k) {
    out.part_b.push_back(na + k);
  }
  out.graph = std::move(b).build();
  return out;
}

Graph random_bounded_degree_graph(Vertex n, int max_degree, double keep, Rng& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      pairs.push_back({u, v});
    }
  }
  shuffle(pairs, rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  GraphBuilder b(n);
  for (const auto& e : pairs) {
    int& du = degree[static_cast<std::size_t>(e.u)];
    int& dv = degree[static_cast<std::size_t>(e.v)];
    if (du < max_degree && dv < max_degree && bernoulli(rng, keep)) {
      ++du;
      ++dv;
      b.add_edge(e.u, e.v);
    }
  }
  return std::move(b).build();
}

std::optional<BipartiteOrdering> random_regular_bipartite(int n, int d, Rng& rng, int max_attempts) {
  if (n < 1 || d < 0 || d > n) {
    throw InvalidArgument("random_regular_bipartite needs 1 <= n and 0 <= d <= n");
  }
  const bool complement = 2 * d > n;
  const int draw = complement ? n - d : d;

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  int attempts = 0;
  for (int k = 0; k < draw; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (;;) {
      if (attempts++ >= max_attempts) {
        return std::nullopt;
      }
      shuffle(perm, rng);
      bool clash = false;
      for (int i = 0; i < n && !clash; ++i) {
        clash = adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] != 0;
      }
      if (!clash) {
        break;
      }
    }
    for (int i = 0; i < n; ++i) {
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
    }
  }

  GraphBuilder b(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) != complement) {
        b.add_edge(i, n + j);
      }
    }
  }
  BipartiteOrdering out;
  out.graph = std::move(b).build();
  for (Vertex i = 0; i < n; ++i) {
    out.part_a.push_back(i);
    out.part_b.push_back(n + i);
  }
  shuffle(out.part_a, rng);
  shuffle(out.part_b, rng);
  out.kind = classify_ordering(out.graph, out.part_a, out.part_b);
  return out;
}

BipartiteOrdering random_ordering(const BipartiteOrdering& h, OrderingKind kind, Rng& rng) {
  std::vector<Vertex> a = h.part_a;
  std::vector<Vertex> b = h.part_b;
  shuffle(a, rng);
  shuffle(b, rng);
  switch (kind) {
    case OrderingKind::matching:
      return matching_ordering(h.graph, a, b);
    case OrderingKind::comatching:
      return comatching_ordering(h.graph, a, b);
    case OrderingKind::unordered:
      break;
  }
  const OrderingKind found = classify_ordering(h.graph, a, b);
  return {h.graph, std::move(a), std::move(b), found};
}

}  // namespace distcol
