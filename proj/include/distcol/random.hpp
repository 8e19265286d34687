#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "distcol/constructions.hpp"
#include "distcol/graph.hpp"

namespace distcol {

// Seeded generators for property tests and randomized verification suites.
// All draws go through `uniform_below` rather than <random> distributions so
// that outputs are identical across standard library implementations.

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// True with probability p (53-bit resolution).
bool bernoulli(Rng& rng, double p);

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[static_cast<std::size_t>(uniform_below(rng, i))]);
  }
}

/// Erdős–Rényi G(n, p).
Graph random_graph(Vertex n, double p, Rng& rng);

/// Random bipartite graph with parts 0..na-1 and na..na+nb-1.
Bipartition random_bipartite(int na, int nb, double p, Rng& rng);

/// Random graph with maximum degree at most `max_degree`: candidate pairs are
/// visited in random order and kept while both endpoints have room, each with
/// probability `keep`.
Graph random_bounded_degree_graph(Vertex n, int max_degree, double keep, Rng& rng);

/// d-regular balanced bipartite graph on n + n vertices as a union of d
/// random perfect matchings, rejecting and redrawing any matching that
/// repeats an edge. Degrees above n/2 are drawn as complements. The returned
/// ordering is a random relabelling of both parts (kind classified).
/// Returns nothing if `max_attempts` redraws are exhausted.
std::optional<BipartiteOrdering> random_regular_bipartite(int n, int d, Rng& rng, int max_attempts = 1000);

/// Random relabelling of `h` into the requested ordering kind (matching or
/// comatching via the ordering searches on shuffled parts, unordered by a
/// plain shuffle).
BipartiteOrdering random_ordering(const BipartiteOrdering& h, OrderingKind kind, Rng& rng);

}  // namespace distcol
