#include "distcol/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "distcol/errors.hpp"

namespace distcol {

namespace {

std::string str(long long x) { return std::to_string(x); }

struct TupleSpace {
  int half;
  int t;
  std::vector<Vertex> weight;  // weight[c] = half^(t-1-c)
  Vertex size;

  TupleSpace(int half_, int t_) : half(half_), t(t_), weight(static_cast<std::size_t>(t_)) {
    Vertex w = 1;
    for (int c = t - 1; c >= 0; --c) {
      weight[static_cast<std::size_t>(c)] = w;
      w *= half;
    }
    size = w;
  }

  int digit(Vertex rank, int c) const { return (rank / weight[static_cast<std::size_t>(c)]) % half; }

  Vertex with_digit(Vertex rank, int c, int value) const {
    return rank + (value - digit(rank, c)) * weight[static_cast<std::size_t>(c)];
  }
};

// Shared generator for both cyclic tuple constructions: `blocks` copies of
// [half]^t arranged around a cycle, link i using free coordinate i mod t.
TupleProduct tuple_cycle(int d, int t, int blocks, const SizeCap& cap) {
  const int half = d / 2;
  const double predicted_vertices = blocks * std::pow(static_cast<double>(half), t);
  check_size(cap, predicted_vertices, predicted_vertices * d / 2.0, "tuple construction");

  const TupleSpace space(half, t);
  const Vertex bs = space.size;
  TupleProduct out;
  out.degree = d;
  out.t = t;
  out.blocks = blocks;

  GraphBuilder b(blocks * bs);
  b.reserve(static_cast<std::size_t>(blocks) * static_cast<std::size_t>(bs) * static_cast<std::size_t>(half));
  for (int i = 0; i < blocks; ++i) {
    const int next = (i + 1) % blocks;
    const int coord = i % t;
    for (Vertex r = 0; r < bs; ++r) {
      for (int s = 0; s < half; ++s) {
        b.add_edge(i * bs + r, next * bs + space.with_digit(r, coord, s));
      }
    }
  }
  out.graph = std::move(b).build();

  out.labels.reserve(static_cast<std::size_t>(blocks * bs));
  for (int i = 0; i < blocks; ++i) {
    for (Vertex r = 0; r < bs; ++r) {
      TupleVertex label{i, std::vector<int>(static_cast<std::size_t>(t))};
      for (int c = 0; c < t; ++c) {
        label.tuple[static_cast<std::size_t>(c)] = space.digit(r, c) + 1;
      }
      out.labels.push_back(std::move(label));
    }
  }
  return out;
}

void require_even_degree(int d) {
  if (d < 2 || d % 2 != 0) {
    throw InvalidArgument("d must be even and >= 2, got " + str(d));
  }
}

// Perfect matching of A-indices into B-indices by augmenting paths.
// candidates[a] lists admissible B-indices in preference order.
// Returns match_of_a, or nothing if some a cannot be matched.
std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<int>>& candidates, std::size_t nb) {
  const std::size_t na = candidates.size();
  std::vector<int> match_a(na, -1);
  std::vector<int> match_b(nb, -1);
  std::vector<std::uint32_t> seen(nb, 0);
  std::uint32_t stamp = 0;

  struct Frame {
    int a;
    std::size_t next;
    int via_b;
  };
  std::vector<Frame> stack;

  for (std::size_t root = 0; root < na; ++root) {
    ++stamp;
    stack.clear();
    stack.push_back({static_cast<int>(root), 0, -1});
    int free_b = -1;
    while (!stack.empty() && free_b < 0) {
      Frame& top = stack.back();
      const auto& cand = candidates[static_cast<std::size_t>(top.a)];
      if (top.next == cand.size()) {
        stack.pop_back();
        continue;
      }
      const int b = cand[top.next++];
      if (seen[static_cast<std::size_t>(b)] == stamp) {
        continue;
      }
      seen[static_cast<std::size_t>(b)] = stamp;
      if (match_b[static_cast<std::size_t>(b)] < 0) {
        free_b = b;
      } else {
        stack.push_back({match_b[static_cast<std::size_t>(b)], 0, b});
      }
    }
    if (free_b < 0) {
      return std::nullopt;
    }
    int b = free_b;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      match_a[static_cast<std::size_t>(it->a)] = b;
      match_b[static_cast<std::size_t>(b)] = it->a;
      b = it->via_b;
    }
  }
  return match_a;
}

enum class PairWith { edges, non_edges };

std::optional<std::vector<Vertex>> aligned_partners(const Graph& h, std::span<const Vertex> part_a,
                                                    std::span<const Vertex> part_b, PairWith mode) {
  std::vector<Vertex> sorted_b(part_b.begin(), part_b.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  std::vector<std::vector<int>> candidates(part_a.size());
  for (std::size_t i = 0; i < part_a.size(); ++i) {
    for (std::size_t k = 0; k < sorted_b.size(); ++k) {
      if (h.adjacent(part_a[i], sorted_b[k]) == (mode == PairWith::edges)) {
        candidates[i].push_back(static_cast<int>(k));
      }
    }
  }
  auto match = perfect_matching(candidates, sorted_b.size());
  if (!match) {
    return std::nullopt;
  }
  std::vector<Vertex> out(part_a.size());
  for (std::size_t i = 0; i < part_a.size(); ++i) {
    out[i] = sorted_b[static_cast<std::size_t>((*match)[i])];
  }
  return out;
}

}  // namespace

void check_size(const SizeCap& cap, double vertices, double edges, const char* what) {
  if (vertices > static_cast<double>(cap.max_vertices)) {
    throw TooLarge(std::string(what) + " would have " + std::to_string(static_cast<long double>(vertices)) +
                   " vertices, above the cap of " + str(cap.max_vertices));
  }
  if (edges > static_cast<double>(cap.max_edges)) {
    throw TooLarge(std::string(what) + " would have " + std::to_string(static_cast<long double>(edges)) +
                   " edges, above the cap of " + str(cap.max_edges));
  }
}

const char* to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::matching:
      return "matching";
    case OrderingKind::comatching:
      return "comatching";
    case OrderingKind::unordered:
      break;
  }
  return "unordered";
}

OrderingKind classify_ordering(const Graph& g, std::span<const Vertex> part_a, std::span<const Vertex> part_b) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < part_a.size(); ++i) {
    hits += g.adjacent(part_a[i], part_b[i]) ? 1 : 0;
  }
  if (hits == part_a.size()) {
    return OrderingKind::matching;
  }
  return hits == 0 ? OrderingKind::comatching : OrderingKind::unordered;
}

void validate_balanced(const Graph& g, std::span<const Vertex> part_a, std::span<const Vertex> part_b) {
  if (part_a.size() != part_b.size()) {
    throw InvalidArgument("unbalanced bipartition: |A| = " + str(static_cast<long long>(part_a.size())) +
                          ", |B| = " + str(static_cast<long long>(part_b.size())));
  }
  try {
    validate_bipartition({g, {part_a.begin(), part_a.end()}, {part_b.begin(), part_b.end()}});
  } catch (const NotBipartite& e) {
    throw InvalidArgument(e.what());
  }
}

Vertex TupleProduct::block_size() const { return blocks == 0 ? 0 : graph.num_vertices() / blocks; }

std::vector<Vertex> TupleProduct::block(int i) const {
  if (i < 0 || i >= blocks) {
    throw InvalidArgument("block index " + str(i) + " out of range");
  }
  const Vertex bs = block_size();
  std::vector<Vertex> out(static_cast<std::size_t>(bs));
  for (Vertex r = 0; r < bs; ++r) {
    out[static_cast<std::size_t>(r)] = i * bs + r;
  }
  return out;
}

Vertex TupleProduct::vertex_of(int block, std::span<const int> tuple) const {
  const int half = degree / 2;
  if (block < 0 || block >= blocks || static_cast<int>(tuple.size()) != t) {
    throw InvalidArgument("bad tuple label");
  }
  Vertex rank = 0;
  for (int symbol : tuple) {
    if (symbol < 1 || symbol > half) {
      throw InvalidArgument("tuple symbol " + str(symbol) + " outside 1.." + str(half));
    }
    rank = rank * half + (symbol - 1);
  }
  return block * block_size() + rank;
}

TupleProduct cycle_product(int d, int t, const CycleProductOptions& options) {
  require_even_degree(d);
  if (t < 3 && !(t == 2 && options.allow_two_blocks)) {
    throw InvalidArgument("t must be >= 3, got " + str(t));
  }
  return tuple_cycle(d, t, t, options.cap);
}

TupleProduct cycle_3t_product(int d, int t, const SizeCap& cap) {
  require_even_degree(d);
  if (t < 3 || t % 2 == 0) {
    throw InvalidArgument("t must be odd and >= 3, got " + str(t));
  }
  return tuple_cycle(d, t, 3 * t, cap);
}

bool is_prime(int q) {
  if (q < 2) {
    return false;
  }
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      return false;
    }
  }
  return true;
}

BipartiteOrdering projective_plane_incidence(int q, const SizeCap& cap) {
  if (!is_prime(q)) {
    throw InvalidArgument("q must be prime, got " + str(q) + " (prime powers are not supported)");
  }
  const double n = static_cast<double>(q) * q + q + 1;
  check_size(cap, 2 * n, n * (q + 1), "projective plane incidence graph");

  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) {
          triples.push_back({x, y, z});
        }
      }
    }
  }
  const auto count = static_cast<Vertex>(triples.size());
  GraphBuilder b(2 * count);
  for (Vertex p = 0; p < count; ++p) {
    const auto& pt = triples[static_cast<std::size_t>(p)];
    for (Vertex l = 0; l < count; ++l) {
      const auto& ln = triples[static_cast<std::size_t>(l)];
      if ((pt[0] * ln[0] + pt[1] * ln[1] + pt[2] * ln[2]) % q == 0) {
        b.add_edge(p, count + l);
      }
    }
  }
  BipartiteOrdering out;
  out.graph = std::move(b).build();
  for (Vertex i = 0; i < count; ++i) {
    out.part_a.push_back(i);
    out.part_b.push_back(count + i);
  }
  out.kind = classify_ordering(out.graph, out.part_a, out.part_b);
  return out;
}

BipartiteOrdering bbp_product(const BipartiteOrdering& h1, const BipartiteOrdering& h2, const SizeCap& cap) {
  validate_balanced(h1.graph, h1.part_a, h1.part_b);
  validate_balanced(h2.graph, h2.part_a, h2.part_b);

  const auto n1 = static_cast<Vertex>(h1.half_size());
  const auto n2 = static_cast<Vertex>(h2.half_size());
  check_size(cap, 2.0 * n1 * n2,
             static_cast<double>(n1) * static_cast<double>(h2.graph.num_edges()) +
                 static_cast<double>(n2) * static_cast<double>(h1.graph.num_edges()),
             "balanced bipartite product");

  // Position of each factor vertex within its part.
  auto positions = [](const BipartiteOrdering& h) {
    std::vector<Vertex> pos(static_cast<std::size_t>(h.graph.num_vertices()), -1);
    for (std::size_t i = 0; i < h.part_a.size(); ++i) {
      pos[static_cast<std::size_t>(h.part_a[i])] = static_cast<Vertex>(i);
      pos[static_cast<std::size_t>(h.part_b[i])] = static_cast<Vertex>(i);
    }
    return pos;
  };
  auto in_a = [](const BipartiteOrdering& h) {
    std::vector<bool> flag(static_cast<std::size_t>(h.graph.num_vertices()), false);
    for (Vertex v : h.part_a) {
      flag[static_cast<std::size_t>(v)] = true;
    }
    return flag;
  };
  const auto pos1 = positions(h1);
  const auto pos2 = positions(h2);
  const auto a1 = in_a(h1);
  const auto a2 = in_a(h2);

  const Vertex offset = n1 * n2;
  auto a_vertex = [n2](Vertex i, Vertex j) { return i * n2 + j; };
  auto b_vertex = [n2, offset](Vertex i, Vertex j) { return offset + i * n2 + j; };

  GraphBuilder b(2 * offset);
  b.reserve(static_cast<std::size_t>(n1) * h2.graph.num_edges() + static_cast<std::size_t>(n2) * h1.graph.num_edges());
  // (a1_i, a2)(b1_i, b2) for every i and every edge a2 b2 of H2.
  for (const auto& e : h2.graph.edges()) {
    const Vertex a = a2[static_cast<std::size_t>(e.u)] ? e.u : e.v;
    const Vertex bb = a == e.u ? e.v : e.u;
    const Vertex j = pos2[static_cast<std::size_t>(a)];
    const Vertex k = pos2[static_cast<std::size_t>(bb)];
    for (Vertex i = 0; i < n1; ++i) {
      b.add_edge(a_vertex(i, j), b_vertex(i, k));
    }
  }
  // (a1, a2_j)(b1, b2_j) for every edge a1 b1 of H1 and every j.
  for (const auto& e : h1.graph.edges()) {
    const Vertex a = a1[static_cast<std::size_t>(e.u)] ? e.u : e.v;
    const Vertex bb = a == e.u ? e.v : e.u;
    const Vertex i = pos1[static_cast<std::size_t>(a)];
    const Vertex k = pos1[static_cast<std::size_t>(bb)];
    for (Vertex j = 0; j < n2; ++j) {
      b.add_edge(a_vertex(i, j), b_vertex(k, j));
    }
  }

  BipartiteOrdering out;
  out.graph = std::move(b).build();
  out.part_a.resize(static_cast<std::size_t>(offset));
  out.part_b.resize(static_cast<std::size_t>(offset));
  for (Vertex v = 0; v < offset; ++v) {
    out.part_a[static_cast<std::size_t>(v)] = v;
    out.part_b[static_cast<std::size_t>(v)] = offset + v;
  }
  out.kind = classify_ordering(out.graph, out.part_a, out.part_b);
  return out;
}

BipartiteOrdering matching_ordering(const Graph& h, std::span<const Vertex> part_a, std::span<const Vertex> part_b) {
  validate_balanced(h, part_a, part_b);
  auto partners = aligned_partners(h, part_a, part_b, PairWith::edges);
  if (!partners) {
    throw NoMatching("graph has no perfect matching between the parts");
  }
  return {h, {part_a.begin(), part_a.end()}, std::move(*partners), OrderingKind::matching};
}

BipartiteOrdering comatching_ordering(const Graph& h, std::span<const Vertex> part_a,
                                      std::span<const Vertex> part_b) {
  validate_balanced(h, part_a, part_b);
  if (h.num_edges() == part_a.size() * part_b.size() && !part_a.empty()) {
    throw NoComatching("graph is complete bipartite");
  }
  auto partners = aligned_partners(h, part_a, part_b, PairWith::non_edges);
  if (!partners) {
    throw NoComatching("bipartite complement has no perfect matching");
  }
  return {h, {part_a.begin(), part_a.end()}, std::move(*partners), OrderingKind::comatching};
}

Bipartition complete_bipartite(int n, int m) {
  if (n < 1 || m < 1) {
    throw InvalidArgument("complete bipartite graph needs n, m >= 1");
  }
  GraphBuilder b(n + m);
  Bipartition out;
  for (Vertex i = 0; i < n; ++i) {
    out.part_a.push_back(i);
    for (Vertex j = 0; j < m; ++j) {
      b.add_edge(i, n + j);
    }
  }
  for (Vertex j = 0; j < m; ++j) {
    out.part_b.push_back(n + j);
  }
  out.graph = std::move(b).build();
  return out;
}

BipartiteOrdering complete_bipartite_ordering(int n) {
  auto k = complete_bipartite(n, n);
  return {std::move(k.graph), std::move(k.part_a), std::move(k.part_b), OrderingKind::matching};
}

std::vector<Edge> EvenEdgeConstruction::clique_edges() const {
  const auto n = static_cast<std::size_t>(product.graph.num_vertices());
  std::vector<char> in_x(n, 0);
  std::vector<char> in_y(n, 0);
  for (Vertex v : x) {
    in_x[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : y) {
    in_y[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> out;
  for (const auto& e : product.graph.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if ((in_x[u] && in_y[v]) || (in_x[v] && in_y[u])) {
      out.push_back(e);
    }
  }
  return out;
}

EvenEdgeConstruction even_edge_construction(int d, int t, const EvenEdgeOptions& options) {
  if (t % 2 != 0 || t < 4) {
    throw InvalidArgument("t must be even and >= 4, got " + str(t));
  }
  if (t == 4 && !options.allow_t4) {
    throw InvalidArgument("t = 4 requires the two-block variant (allow_t4); default minimum is t = 6");
  }
  const int t1 = t - 2;
  if (d < 2 || d % (2 * t1) != 0) {
    throw InvalidArgument("d must be a positive multiple of 2(t-2) = " + str(2 * t1) + ", got " + str(d));
  }
  EvenEdgeConstruction out;
  out.t = t;
  out.d = d;
  out.t1 = t1;
  out.d1 = (t1 - 1) * d / t1;
  out.d2 = d / t1;
  const int half = out.d1 / 2;
  if (t1 == 2 && half < 2) {
    throw InvalidArgument("t = 4 needs d >= 8 so that the factor has a comatching ordering");
  }

  out.factor = cycle_product(out.d1, t1, {options.cap, t1 == 2});
  const TupleSpace space(half, t1);
  const Vertex bs = space.size;

  // Block-aligned comatching: a-index k holds (U^(i), tau) for even i and its
  // partner is (U^(i+1), sigma(tau)), where sigma shifts a coordinate that is
  // not free on the link U^(i) - U^(i+1), so the pair is never adjacent.
  BipartiteOrdering g1;
  g1.graph = out.factor.graph;
  for (int i = 0; i < t1; i += 2) {
    const int shifted = (i + 1) % t1;
    for (Vertex r = 0; r < bs; ++r) {
      Vertex partner = space.with_digit(r, shifted, (space.digit(r, shifted) + 1) % half);
      if (t1 == 2) {
        partner = space.with_digit(partner, i, (space.digit(partner, i) + 1) % half);
      }
      g1.part_a.push_back(i * bs + r);
      g1.part_b.push_back((i + 1) * bs + partner);
    }
  }
  g1.kind = classify_ordering(g1.graph, g1.part_a, g1.part_b);
  if (g1.kind != OrderingKind::comatching) {
    throw std::logic_error("block-aligned ordering is not a comatching");
  }

  out.product = bbp_product(g1, complete_bipartite_ordering(out.d2), options.cap);
  const auto n2 = static_cast<Vertex>(out.d2);
  const Vertex offset = static_cast<Vertex>(g1.part_a.size()) * n2;
  // U^(0) occupies a-indices 0..bs-1 and its partners U^(1) the same b-indices.
  for (Vertex i = 0; i < bs; ++i) {
    for (Vertex j = 0; j < n2; ++j) {
      out.x.push_back(i * n2 + j);
      out.y.push_back(offset + i * n2 + j);
    }
  }
  return out;
}

BipartiteOrdering iterated_product(int d, int t, const SizeCap& cap) {
  if (t < 2) {
    throw InvalidArgument("t must be >= 2, got " + str(t));
  }
  if (d < 2 || (d - 1) % (t - 1) != 0) {
    throw InvalidArgument("d must satisfy d >= 2 and d = 1 mod (t-1) = 1 mod " + str(t - 1) + ", got " + str(d));
  }
  const int dp = (d - 1) / (t - 1) + 1;
  const double side = std::pow(static_cast<double>(dp), t - 1);
  check_size(cap, 2 * side, d * side, "iterated product");

  const auto factor = complete_bipartite_ordering(dp);
  BipartiteOrdering out = factor;
  for (int k = 2; k <= t - 1; ++k) {
    out = bbp_product(out, factor, cap);
  }
  return out;
}

}  // namespace distcol
