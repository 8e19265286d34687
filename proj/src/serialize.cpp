#include "distcol/serialize.hpp"

#include <cmath>

#include "distcol/errors.hpp"

namespace distcol {

using nlohmann::json;

const char* to_string(PowerMode mode) { return mode == PowerMode::vertex ? "vertex" : "edge"; }

PowerMode parse_mode(const std::string& text) {
  if (text == "vertex") {
    return PowerMode::vertex;
  }
  if (text == "edge") {
    return PowerMode::edge;
  }
  throw InvalidArgument("mode must be 'vertex' or 'edge', got '" + text + "'");
}

json root_to_json(const Root& root) {
  if (const auto* v = std::get_if<Vertex>(&root)) {
    return json{{"vertex", *v}};
  }
  const Edge e = std::get<Edge>(root);
  return json{{"edge", json::array({e.u, e.v})}};
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(json::array({e.u, e.v}));
  }
  return json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<Vertex>();
    if (n < 0) {
      throw ParseError("vertex count must be non-negative");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("each edge must be a [u, v] pair");
      }
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph(n, std::move(edges));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Colouring& c) {
  return json{{"mode", to_string(c.target.mode)}, {"t", c.target.t}, {"numColours", c.num_colours}, {"colours", c.colours}};
}

Colouring colouring_from_json(const json& j) {
  try {
    Colouring c;
    c.target.mode = parse_mode(j.at("mode").get<std::string>());
    c.target.t = j.at("t").get<int>();
    c.num_colours = j.at("numColours").get<int>();
    c.colours = j.at("colours").get<std::vector<int>>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed colouring JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const DensityReport& r) {
  json j{{"t", r.t},
         {"mode", to_string(r.mode)},
         {"maxDegreePower", r.max_degree_power},
         {"maxSpanEdges", r.max_span_edges},
         {"impliedF", {{"numerator", r.implied_f_numerator}, {"denominator", r.implied_f_denominator}}}};
  j["impliedFValue"] = std::isfinite(r.implied_f) ? json(r.implied_f) : json(nullptr);
  if (!r.per_root.empty()) {
    j["perRoot"] = r.per_root;
  }
  return j;
}

json to_json(const PathPairReport& r) {
  return json{{"root", root_to_json(r.root)},
              {"t", r.t},
              {"variant", to_string(r.variant)},
              {"pathCount", r.path_count},
              {"pairCount", r.pair_count}};
}

json to_json(const TheoremCheck& r) {
  json j{{"holds", r.holds},
         {"experimental", r.experimental},
         {"statistic", to_string(r.statistic)},
         {"maxDegree", r.max_degree},
         {"epsilon", r.epsilon},
         {"bound", r.bound},
         {"maxCount", r.max_count},
         {"worstMargin", r.worst_margin}};
  j["worstRoot"] = r.worst_root ? root_to_json(*r.worst_root) : json(nullptr);
  return j;
}

json labels_to_json(const TupleProduct& p) {
  json labels = json::array();
  for (std::size_t v = 0; v < p.labels.size(); ++v) {
    labels.push_back({{"vertex", v}, {"block", p.labels[v].block}, {"tuple", p.labels[v].tuple}});
  }
  return json{{"kind", "tuple"}, {"blocks", p.blocks}, {"t", p.t}, {"d", p.degree}, {"labels", std::move(labels)}};
}

namespace {

json part_labels(Vertex n, std::span<const Vertex> a, std::span<const Vertex> b) {
  json labels = json::array();
  std::vector<std::pair<char, std::size_t>> where(static_cast<std::size_t>(n), {'?', 0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    where[static_cast<std::size_t>(a[i])] = {'A', i};
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    where[static_cast<std::size_t>(b[i])] = {'B', i};
  }
  for (std::size_t v = 0; v < where.size(); ++v) {
    labels.push_back({{"vertex", v}, {"part", std::string(1, where[v].first)}, {"index", where[v].second}});
  }
  return labels;
}

}  // namespace

json labels_to_json(const BipartiteOrdering& h) {
  return json{{"kind", "bipartite"},
              {"ordering", to_string(h.kind)},
              {"labels", part_labels(h.graph.num_vertices(), h.part_a, h.part_b)}};
}

json labels_to_json(const Bipartition& h) {
  return json{{"kind", "bipartite"},
              {"ordering", "unordered"},
              {"labels", part_labels(h.graph.num_vertices(), h.part_a, h.part_b)}};
}

}  // namespace distcol
