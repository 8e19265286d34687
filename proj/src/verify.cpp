#include "distcol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "distcol/analysis.hpp"
#include "distcol/colouring.hpp"
#include "distcol/errors.hpp"
#include "distcol/graph_ops.hpp"
#include "distcol/random.hpp"

namespace distcol {

namespace {

std::string str(long long v) { return std::to_string(v); }

std::string str(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string str(bool v) { return v ? "true" : "false"; }

class Recorder {
 public:
  explicit Recorder(SuiteResult& out) : out_(out) {}

  void instance(std::string name) { instance_ = std::move(name); }

  bool check(std::string check, std::string value, std::string expected, bool pass) {
    out_.rows.push_back({out_.suite, instance_, std::move(check), std::move(value), std::move(expected), pass});
    return pass;
  }

  template <typename T>
  bool equal(std::string name, const T& value, const T& expected) {
    return check(std::move(name), str(value), str(expected), value == expected);
  }

  void error(const std::exception& e) { check("completed", e.what(), "no error", false); }

 private:
  SuiteResult& out_;
  std::string instance_;
};

// Tallies one property over many trials, reporting a single row plus one row
// per failing trial.
class Tally {
 public:
  Tally(Recorder& rec, std::string instance, std::string check)
      : rec_(rec), instance_(std::move(instance)), check_(std::move(check)) {}

  void record(bool ok, int trial, const std::string& detail) {
    ++total_;
    if (ok) {
      ++passed_;
      return;
    }
    failures_.push_back("trial " + str(static_cast<long long>(trial)) + ": " + detail);
  }

  void flush() {
    rec_.instance(instance_);
    for (const auto& f : failures_) {
      rec_.check(check_, f, "pass", false);
    }
    rec_.check(check_, str(static_cast<long long>(passed_)) + "/" + str(static_cast<long long>(total_)),
               str(static_cast<long long>(total_)) + "/" + str(static_cast<long long>(total_)), passed_ == total_);
  }

 private:
  Recorder& rec_;
  std::string instance_;
  std::string check_;
  int passed_ = 0;
  int total_ = 0;
  std::vector<std::string> failures_;
};

std::string grid_name(const char* a, int x, const char* b, int y) {
  return std::string(a) + "=" + str(static_cast<long long>(x)) + " " + b + "=" + str(static_cast<long long>(y));
}

bool is_regular_of(const Graph& g, int d) { return g.num_vertices() > 0 && g.is_regular() && g.max_degree() == d; }

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) {
        return false;
      }
    }
  }
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

// ---------------------------------------------------------------- P4

void suite_p4(const SuiteParams& p, Recorder& rec) {
  for (int d : p.d) {
    for (int t : p.t) {
      rec.instance(grid_name("d", d, "t", t));
      try {
        const TupleProduct c = cycle_product(d, t, {p.cap, false});
        const Graph& g = c.graph;
        rec.check("d-regular", str(static_cast<long long>(g.max_degree())), str(static_cast<long long>(d)),
                  is_regular_of(g, d));
        rec.equal<long long>("|V| = t(d/2)^t", g.num_vertices(), t * ipow(d / 2, t));
        bool blocks_independent = true;
        for (int i = 0; i < c.blocks; ++i) {
          blocks_independent = blocks_independent && is_independent(g, c.block(i));
        }
        rec.equal("blocks independent", blocks_independent, true);
        const auto cert = verify_power_clique(g, t, PowerMode::vertex, c.block(0));
        rec.equal("U0 clique in G^t", cert.is_clique, true);
        rec.equal<long long>("chi_t lower bound (d/2)^t", static_cast<long long>(c.block(0).size()), ipow(d / 2, t));
        rec.equal("bipartite iff t even", is_bipartite(g), t % 2 == 0);
        if (t % 2 == 1) {
          const auto og = odd_girth(g);
          rec.check("odd girth >= t", og ? str(static_cast<long long>(*og)) : "none", ">= " + str(static_cast<long long>(t)),
                    og && *og >= t);
        }
      } catch (const Error& e) {
        rec.error(e);
      }
    }
  }
}

// ---------------------------------------------------------------- P5

void suite_p5(const SuiteParams& p, Recorder& rec) {
  for (int q : p.q) {
    rec.instance("q=" + str(static_cast<long long>(q)));
    try {
      const BipartiteOrdering h = projective_plane_incidence(q, p.cap);
      const Graph& g = h.graph;
      const long long points = static_cast<long long>(q) * q + q + 1;
      const int d = q + 1;
      rec.check("(q+1)-regular", str(static_cast<long long>(g.max_degree())), str(static_cast<long long>(d)),
                is_regular_of(g, d));
      rec.equal<long long>("|V| = 2(q^2+q+1)", g.num_vertices(), 2 * points);
      rec.equal<long long>("|E| = (q^2+q+1)(q+1)", static_cast<long long>(g.num_edges()), points * d);
      const auto gg = girth(g);
      rec.check("girth = 6", gg ? str(static_cast<long long>(*gg)) : "none", "6", gg == 6);

      const auto points_clique = verify_power_clique(g, 2, PowerMode::vertex, h.part_a);
      const auto lines_clique = verify_power_clique(g, 2, PowerMode::vertex, h.part_b);
      rec.equal("points form a clique in G^2", points_clique.is_clique, true);
      rec.equal("lines form a clique in G^2", lines_clique.is_clique, true);

      const Graph square = power(g, 2);
      const Colouring greedy = greedy_colour(square);
      int chi = greedy.num_colours;
      std::string how = "greedy";
      if (chi != points && square.num_vertices() <= p.exact_limit) {
        chi = exact_chromatic(square, p.exact_limit);
        how = "exact";
      }
      if (chi == points || square.num_vertices() <= p.exact_limit) {
        rec.check("chi_2 = q^2+q+1 (" + how + ")", str(static_cast<long long>(chi)), str(points), chi == points);
      } else {
        rec.check("chi_2 = q^2+q+1", "greedy " + str(static_cast<long long>(chi)) + ", exact over cap",
                  str(points), false);
      }

      const auto all_edges = g.edges();
      const auto cube = verify_power_clique(g, 3, all_edges);
      rec.equal("L(G)^3 complete", cube.is_clique, true);
      rec.equal<long long>("chi'_3 = d^3-d^2+d = |E|", static_cast<long long>(g.num_edges()),
                           static_cast<long long>(d) * d * d - static_cast<long long>(d) * d + d);
    } catch (const Error& e) {
      rec.error(e);
    }
  }
}

// ---------------------------------------------------------------- P6 / P7

struct Factor {
  BipartiteOrdering h;
  int d = 0;
};

// Random d-regular n+n factor that admits `kind`.
Factor random_factor(Rng& rng, OrderingKind kind, int max_half) {
  for (;;) {
    const int n = uniform_int(rng, 1, max_half);
    const int hi = kind == OrderingKind::comatching ? n - 1 : n;
    if (hi < 1) {
      continue;
    }
    const int d = uniform_int(rng, 1, hi);
    auto h = random_regular_bipartite(n, d, rng);
    if (!h) {
      continue;
    }
    return {random_ordering(*h, kind, rng), d};
  }
}

const OrderingKind kKinds[2] = {OrderingKind::matching, OrderingKind::comatching};

std::string combo_name(OrderingKind a, OrderingKind b) { return std::string(to_string(a)) + "x" + to_string(b); }

void suite_p6(const SuiteParams& p, Recorder& rec) {
  Rng rng(p.seed);
  for (OrderingKind k1 : kKinds) {
    for (OrderingKind k2 : kKinds) {
      Tally degree(rec, combo_name(k1, k2), "degree law");
      Tally parts(rec, combo_name(k1, k2), "balanced parts n1*n2");
      for (int trial = 0; trial < p.trials; ++trial) {
        const Factor f1 = random_factor(rng, k1, 6);
        const Factor f2 = random_factor(rng, k2, 6);
        const BipartiteOrdering prod = bbp_product(f1.h, f2.h, p.cap);
        const bool both_matching = k1 == OrderingKind::matching && k2 == OrderingKind::matching;
        const int expected = f1.d + f2.d - (both_matching ? 1 : 0);
        const Graph& g = prod.graph;
        degree.record(is_regular_of(g, expected), trial,
                      "degrees " + str(static_cast<long long>(g.min_degree())) + ".." +
                          str(static_cast<long long>(g.max_degree())) + ", expected " +
                          str(static_cast<long long>(expected)));
        const std::size_t half = f1.h.half_size() * f2.h.half_size();
        bool balanced = prod.part_a.size() == half && prod.part_b.size() == half;
        if (balanced) {
          try {
            validate_bipartition(prod.bipartition());
          } catch (const NotBipartite&) {
            balanced = false;
          }
        }
        parts.record(balanced, trial, "parts not a balanced bipartition");
      }
      degree.flush();
      parts.flush();
    }
  }
}

// Random subset of `pool` of size between 2 and 3 (or all of it if smaller)
// drawn from the component of its first element.
std::vector<Vertex> witness_set(Rng& rng, std::vector<Vertex> pool, const std::vector<int>& dist) {
  std::erase_if(pool, [&](Vertex v) { return dist[static_cast<std::size_t>(v)] < 0; });
  shuffle(pool, rng);
  const std::size_t want = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(uniform_int(rng, 2, 3)));
  pool.resize(want);
  return pool;
}

int max_distance(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
  int worst = 0;
  for (Vertex s : from) {
    const auto dist = distances_from(g, s);
    for (Vertex x : to) {
      const int dx = dist[static_cast<std::size_t>(x)];
      if (dx < 0) {
        return -1;
      }
      worst = std::max(worst, dx);
    }
  }
  return worst;
}

void suite_p7(const SuiteParams& p, Recorder& rec) {
  Rng rng(p.seed);
  for (int odd_case = 0; odd_case < 2; ++odd_case) {
    Tally law(rec, odd_case ? "t1 even, t2 odd" : "t1 even, t2 even", "(t1+t2)-path law");
    for (int trial = 0; trial < p.trials; ++trial) {
      const Factor f1 = random_factor(rng, kKinds[uniform_below(rng, 2)], 5);
      const Factor f2 = random_factor(rng, kKinds[uniform_below(rng, 2)], 5);
      const BipartiteOrdering& h1 = f1.h;
      const BipartiteOrdering& h2 = f2.h;

      const auto x1 = witness_set(rng, h1.part_a, distances_from(h1.graph, h1.part_a[0]));
      const int t1 = std::max(2, max_distance(h1.graph, x1, x1));
      const auto x2 = witness_set(rng, h2.part_a, distances_from(h2.graph, h2.part_a[0]));
      std::vector<Vertex> y2;
      int t2 = 0;
      if (odd_case) {
        y2 = witness_set(rng, h2.part_b, distances_from(h2.graph, x2[0]));
        if (y2.empty()) {
          y2 = {h2.part_b[0]};
        }
        t2 = max_distance(h2.graph, x2, y2);
      } else {
        t2 = std::max(2, max_distance(h2.graph, x2, x2));
      }
      if (t2 < 0) {
        // No witnessed path family in H2; the hypothesis is vacuous for this draw.
        --trial;
        continue;
      }

      const BipartiteOrdering prod = bbp_product(h1, h2, p.cap);
      const auto n2 = static_cast<Vertex>(h2.half_size());
      const Vertex offset = static_cast<Vertex>(h1.half_size()) * n2;
      std::vector<Vertex> pos1(static_cast<std::size_t>(h1.graph.num_vertices()));
      std::vector<Vertex> pos2(static_cast<std::size_t>(h2.graph.num_vertices()));
      for (std::size_t i = 0; i < h1.half_size(); ++i) {
        pos1[static_cast<std::size_t>(h1.part_a[i])] = static_cast<Vertex>(i);
        pos1[static_cast<std::size_t>(h1.part_b[i])] = static_cast<Vertex>(i);
      }
      for (std::size_t j = 0; j < h2.half_size(); ++j) {
        pos2[static_cast<std::size_t>(h2.part_a[j])] = static_cast<Vertex>(j);
        pos2[static_cast<std::size_t>(h2.part_b[j])] = static_cast<Vertex>(j);
      }

      std::vector<Vertex> sources;
      std::vector<Vertex> targets;
      for (Vertex a1 : x1) {
        for (Vertex a2 : x2) {
          sources.push_back(pos1[static_cast<std::size_t>(a1)] * n2 + pos2[static_cast<std::size_t>(a2)]);
        }
      }
      if (odd_case) {
        // Y1 = {b1_i : a1_i in X1}, i.e. the same positions on the B side.
        for (Vertex a1 : x1) {
          for (Vertex b2 : y2) {
            targets.push_back(offset + pos1[static_cast<std::size_t>(a1)] * n2 + pos2[static_cast<std::size_t>(b2)]);
          }
        }
      } else {
        targets = sources;
      }
      const int worst = max_distance(prod.graph, sources, targets);
      law.record(worst >= 0 && worst <= t1 + t2, trial,
                 "distance " + str(static_cast<long long>(worst)) + " > t1+t2 = " + str(static_cast<long long>(t1 + t2)));
    }
    law.flush();
  }
}

// ---------------------------------------------------------------- P9

void suite_p9(const SuiteParams& p, Recorder& rec) {
  for (int d : p.d) {
    for (int t : p.t) {
      rec.instance(grid_name("d", d, "t", t));
      try {
        const EvenEdgeConstruction c = even_edge_construction(d, t, {p.cap, false});
        const Graph& g = c.product.graph;
        rec.check("d-regular", str(static_cast<long long>(g.max_degree())), str(static_cast<long long>(d)),
                  is_regular_of(g, d));
        rec.equal("bipartite", is_bipartite(g), true);
        const auto edges = c.clique_edges();
        const auto cert = verify_power_clique(g, t, edges);
        rec.equal("X-Y edges form a clique in L(G)^t", cert.is_clique, true);
        const double lower = std::pow(static_cast<double>(d), t) / (std::numbers::e * t * std::pow(2.0, t - 1));
        rec.check("clique size > d^t/(e t 2^(t-1))", str(static_cast<long long>(edges.size())), "> " + str(lower),
                  static_cast<double>(edges.size()) > lower);
      } catch (const Error& e) {
        rec.error(e);
      }
    }
  }
}

// ---------------------------------------------------------------- P10

void suite_p10(const SuiteParams& p, Recorder& rec) {
  for (int d : p.d) {
    for (int t : p.t) {
      rec.instance(grid_name("d", d, "t", t));
      try {
        const BipartiteOrdering h = iterated_product(d, t, p.cap);
        const Graph& g = h.graph;
        const int dp = (d - 1) / (t - 1) + 1;
        rec.check("d-regular", str(static_cast<long long>(g.max_degree())), str(static_cast<long long>(d)),
                  is_regular_of(g, d));
        rec.equal("bipartite", is_bipartite(g), true);
        rec.equal<long long>("|E| = d d'^(t-1)", static_cast<long long>(g.num_edges()), d * ipow(dp, t - 1));
        const auto all_edges = g.edges();
        const auto cert = verify_power_clique(g, t, all_edges);
        rec.equal("L(G)^t complete", cert.is_clique, true);
        if (static_cast<long long>(g.num_edges()) <= p.exact_limit) {
          const auto chi = distance_chromatic(g, t, PowerMode::edge, Method::exact, p.exact_limit);
          rec.equal<long long>("chi'_t = |E| (exact)", chi.value, static_cast<long long>(g.num_edges()));
        } else {
          rec.check("chi'_t = |E| (clique certified)", str(static_cast<long long>(g.num_edges())),
                    str(static_cast<long long>(g.num_edges())), cert.is_clique);
        }
      } catch (const Error& e) {
        rec.error(e);
      }
    }
  }
}

// ---------------------------------------------------------------- L8 / EQ1

void suite_l8(const SuiteParams& p, Recorder& rec) {
  Rng rng(p.seed);
  for (int k : p.k) {
    Tally tally(rec, "k=" + str(static_cast<long long>(k)), "bunched edges within bound");
    for (int trial = 0; trial < p.trials; ++trial) {
      const int na = uniform_int(rng, 2, 14);
      const int nb = uniform_int(rng, 2, 14);
      const double density = 0.1 + 0.6 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
      Bipartition h = thin_to_cycle_free(random_bipartite(na, nb, density, rng), 2 * k, rng, p.cycle_cap);
      const auto res = lemma8_bound_holds(h, k, p.cycle_cap);
      tally.record(res.holds, trial,
                   str(static_cast<long long>(res.bunched)) + " bunched edges > bound " + str(res.bound));
    }
    tally.flush();
  }
}

void suite_eq1(const SuiteParams& p, Recorder& rec) {
  Rng rng(p.seed);
  for (int k : p.k) {
    Tally tally(rec, "k=" + str(static_cast<long long>(k)), "edge count within bound");
    for (int trial = 0; trial < p.trials; ++trial) {
      const auto n = static_cast<Vertex>(uniform_int(rng, 3, 20));
      const double density = 0.1 + 0.6 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
      Graph g = thin_to_cycle_free(random_graph(n, density, rng), 2 * k, rng, p.cycle_cap);
      const auto res = pikhurko_bound_check(g, k, p.cycle_cap);
      tally.record(res.holds, trial, str(static_cast<long long>(res.edges)) + " edges > bound " + str(res.bound));
    }
    tally.flush();
  }
}

// ---------------------------------------------------------------- T1V / T1E

void suite_theorem(const SuiteParams& p, Recorder& rec, PowerMode mode) {
  Rng rng(p.seed);
  for (int t : p.t) {
    const std::string name = grid_name("t", t, "l", p.ell);
    Tally tally(rec, name, mode == PowerMode::vertex ? "path count within bound" : "edge path count within bound");
    for (int trial = 0; trial < p.trials; ++trial) {
      const auto n = static_cast<Vertex>(uniform_int(rng, 6, 24));
      const double keep = 0.4 + 0.6 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
      Graph g = thin_to_cycle_free(random_bounded_degree_graph(n, 4, keep, rng), p.ell, rng, p.cycle_cap);
      if (g.max_degree() < 2) {
        --trial;
        continue;
      }
      const auto res = theorem_constant_check(g, t, p.ell, mode, p.cycle_cap);
      tally.record(res.holds, trial, "count " + str(static_cast<long long>(res.max_count)) + " > bound " + str(res.bound));
    }
    tally.flush();
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw InvalidArgument(message);
  }
}

void require_nonempty(const std::vector<int>& values, const char* name) {
  require(!values.empty(), std::string("--") + name + " needs at least one value");
}

}  // namespace

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"P4", "P5", "P6", "P7", "P9", "P10", "L8", "EQ1", "T1V", "T1E"};
  return ids;
}

SuiteParams resolve_suite_params(const std::string& id, SuiteParams p) {
  auto fill = [](std::vector<int>& v, std::vector<int> fallback) {
    if (v.empty()) {
      v = std::move(fallback);
    }
  };
  auto fill_trials = [&p](int fallback) {
    if (p.trials == 0) {
      p.trials = fallback;
    }
    require(p.trials > 0, "--trials must be positive");
  };
  const auto s = [](int v) { return std::to_string(v); };

  if (id == "P4") {
    fill(p.d, {4, 6});
    fill(p.t, {3, 4});
    for (int d : p.d) {
      require(d >= 2 && d % 2 == 0, "d must be even and >= 2, got " + s(d));
    }
    for (int t : p.t) {
      require(t >= 3, "t must be >= 3, got " + s(t));
    }
  } else if (id == "P5") {
    fill(p.q, {2, 3});
    for (int q : p.q) {
      require(is_prime(q), "q must be prime, got " + s(q));
    }
  } else if (id == "P6" || id == "P7") {
    fill_trials(200);
  } else if (id == "P9") {
    fill(p.d, {8});
    fill(p.t, {6});
    for (int t : p.t) {
      require(t >= 6 && t % 2 == 0, "t must be even and >= 6, got " + s(t));
      for (int d : p.d) {
        require(d > 0 && d % (2 * (t - 2)) == 0,
                "d must be a positive multiple of 2(t-2) = " + s(2 * (t - 2)) + ", got " + s(d));
      }
    }
  } else if (id == "P10") {
    fill(p.d, {3, 5});
    fill(p.t, {2, 3});
    for (int t : p.t) {
      require(t >= 2, "t must be >= 2, got " + s(t));
      for (int d : p.d) {
        require(d >= 2 && (d - 1) % (t - 1) == 0,
                "d must satisfy d = 1 mod (t-1) = 1 mod " + s(t - 1) + ", got d=" + s(d));
      }
    }
  } else if (id == "L8" || id == "EQ1") {
    fill_trials(500);
    fill(p.k, {2, 3});
    for (int k : p.k) {
      require(k >= 2 && 2 * k <= p.cycle_cap, "k must satisfy 2 <= k and 2k <= cycle cap, got " + s(k));
    }
  } else if (id == "T1V" || id == "T1E") {
    fill_trials(100);
    const bool vertex = id == "T1V";
    fill(p.t, {vertex ? 2 : 3});
    if (p.ell == 0) {
      p.ell = 6;
    }
    require(p.ell % 2 == 0, "l must be even, got " + s(p.ell));
    require(p.ell <= p.cycle_cap, "l exceeds the cycle cap " + s(p.cycle_cap));
    for (int t : p.t) {
      require(t >= 1, "t must be >= 1");
      if (vertex) {
        require(p.ell >= 2 * t + 2, "vertex mode needs l >= 2t+2, got l=" + s(p.ell) + " t=" + s(t));
      } else {
        require(t >= 2 && p.ell >= 2 * t, "edge mode needs t >= 2 and l >= 2t, got l=" + s(p.ell) + " t=" + s(t));
      }
    }
  } else {
    throw InvalidArgument("unknown suite id '" + id + "'");
  }

  if (id == "P4" || id == "P9" || id == "P10") {
    require_nonempty(p.d, "d");
    require_nonempty(p.t, "t");
  }
  return p;
}

SuiteResult run_suite(const std::string& id, const SuiteParams& params) {
  const SuiteParams p = resolve_suite_params(id, params);
  SuiteResult out;
  out.suite = id;
  Recorder rec(out);
  static const std::map<std::string, std::function<void(const SuiteParams&, Recorder&)>> suites = {
      {"P4", suite_p4},
      {"P5", suite_p5},
      {"P6", suite_p6},
      {"P7", suite_p7},
      {"P9", suite_p9},
      {"P10", suite_p10},
      {"L8", suite_l8},
      {"EQ1", suite_eq1},
      {"T1V", [](const SuiteParams& sp, Recorder& r) { suite_theorem(sp, r, PowerMode::vertex); }},
      {"T1E", [](const SuiteParams& sp, Recorder& r) { suite_theorem(sp, r, PowerMode::edge); }},
  };
  suites.at(id)(p, rec);
  return out;
}

}  // namespace distcol
