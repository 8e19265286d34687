#pragma once

#include <string>

#include <json.hpp>

#include "distcol/analysis.hpp"
#include "distcol/colouring.hpp"
#include "distcol/constructions.hpp"

namespace distcol {

inline constexpr const char* kVersion = "0.1.0";

const char* to_string(PowerMode mode);
PowerMode parse_mode(const std::string& text);

nlohmann::json root_to_json(const Root& root);

/// {"n": n, "edges": [[u, v], ...]}, 0-based, edges in canonical order.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// {mode, t, numColours, colours}
nlohmann::json to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const PathPairReport& r);
nlohmann::json to_json(const TheoremCheck& r);

/// Label sidecars: {"kind": "tuple", "labels": [{"vertex", "block", "tuple"}, ...]}
/// or {"kind": "bipartite", "ordering": ..., "labels": [{"vertex", "part", "index"}, ...]},
/// indexed by vertex.
nlohmann::json labels_to_json(const TupleProduct& p);
nlohmann::json labels_to_json(const BipartiteOrdering& h);
nlohmann::json labels_to_json(const Bipartition& h);

}  // namespace distcol
