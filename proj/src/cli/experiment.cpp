#include "experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "distcol/analysis.hpp"
#include "distcol/errors.hpp"
#include "distcol/graph_ops.hpp"
#include "distcol/io.hpp"
#include "distcol/serialize.hpp"

namespace distcol::cli {

using nlohmann::json;

namespace {

const char* method_name(Method m) { return m == Method::exact ? "exact" : "greedy"; }

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int param(const Params& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw InvalidArgument("missing parameter --" + name);
  }
  return it->second;
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw InvalidArgument(message);
  }
}

std::string s(long long v) { return std::to_string(v); }

double dpow(double base, int exp) { return std::pow(base, exp); }

Graph simple_cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
  }
  return std::move(b).build();
}

Graph simple_path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) {
    b.add_edge(i, i + 1);
  }
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

}  // namespace

json Caps::to_json() const {
  return json{{"maxVertices", size.max_vertices},
              {"maxEdges", size.max_edges},
              {"exactLimit", exact_limit},
              {"cycleCap", cycle_cap},
              {"maxDerivedVertices", max_derived_vertices},
              {"maxDerivedEdges", max_derived_edges}};
}

json ExperimentSpec::to_json() const {
  json j{{"command", command},
         {"statistics", statistics},
         {"t", t},
         {"mode", distcol::to_string(mode)},
         {"method", method_name(method)},
         {"seed", seed},
         {"caps", caps.to_json()}};
  if (!construction.empty()) {
    j["construction"] = construction;
    j["params"] = params;
  }
  if (!graph_path.empty()) {
    j["graph"] = graph_path;
  }
  if (ell != 0) {
    j["l"] = ell;
  }
  return j;
}

json ResultRecord::to_json() const {
  json j{{"version", kVersion},
         {"seed", seed},
         {"timestamp", utc_timestamp()},
         {"spec", spec},
         {"graph", graph},
         {"statistic", statistic},
         {"value", value},
         {"durationMs", duration_ms}};
  if (!root.empty()) {
    j["root"] = root;
  }
  if (!details.is_null()) {
    j["details"] = details;
  }
  if (bound) {
    j["bound"] = *bound;
  }
  if (pass) {
    j["pass"] = *pass;
  }
  if (error) {
    j["error"] = *error;
  }
  return j;
}

const std::vector<ConstructionInfo>& constructions() {
  static const std::vector<ConstructionInfo> list = {
      {"cycle-product", {"d", "t"}, "t-block cyclic tuple construction, d even, t >= 3"},
      {"cycle-3t", {"d", "t"}, "3t-block cyclic tuple construction, d even, t odd >= 3"},
      {"pg", {"q"}, "point-line incidence graph of PG(2,q), q prime"},
      {"even-edge", {"d", "t"}, "bipartite product with a large L(G)^t clique, t even >= 6, 2(t-2) | d"},
      {"iterated", {"d", "t"}, "iterated product of K_{d',d'}, d = 1 mod (t-1)"},
      {"complete-bipartite", {"n", "m"}, "K_{n,m}"},
      {"cycle", {"n"}, "cycle C_n, n >= 3"},
      {"path", {"n"}, "path on n vertices"},
      {"complete", {"n"}, "complete graph K_n"},
  };
  return list;
}

void validate_construction(const std::string& name, const Params& params, const Caps& caps) {
  const ConstructionInfo* info = nullptr;
  for (const auto& c : constructions()) {
    if (c.name == name) {
      info = &c;
    }
  }
  require(info != nullptr, "unknown construction '" + name + "'");
  for (const auto& p : info->params) {
    param(params, p);
  }
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& p : info->params) {
      known = known || p == key;
    }
    require(known, "construction '" + name + "' takes no parameter --" + key);
  }

  double vertices = 0;
  double edges = 0;
  if (name == "cycle-product" || name == "cycle-3t") {
    const int d = param(params, "d");
    const int t = param(params, "t");
    require(d % 2 == 0, "d must be even, got " + s(d));
    require(d >= 2, "d must be >= 2, got " + s(d));
    require(t >= 3, "t must be >= 3, got " + s(t));
    if (name == "cycle-3t") {
      require(t % 2 == 1, "t must be odd, got " + s(t));
    }
    vertices = (name == "cycle-3t" ? 3.0 : 1.0) * t * dpow(d / 2, t);
    edges = vertices * d / 2;
  } else if (name == "pg") {
    const int q = param(params, "q");
    require(is_prime(q), "q must be prime, got " + s(q));
    const double points = static_cast<double>(q) * q + q + 1;
    vertices = 2 * points;
    edges = points * (q + 1);
  } else if (name == "even-edge") {
    const int d = param(params, "d");
    const int t = param(params, "t");
    require(t >= 6 && t % 2 == 0, "t must be even and >= 6, got " + s(t));
    require(d > 0 && d % (2 * (t - 2)) == 0, "d must be a positive multiple of 2(t-2) = " + s(2 * (t - 2)) + ", got " + s(d));
    const int t1 = t - 2;
    const int d1 = (t1 - 1) * d / t1;
    vertices = t1 * dpow(d1 / 2, t1) * (d / t1);
    edges = vertices * d / 2;
  } else if (name == "iterated") {
    const int d = param(params, "d");
    const int t = param(params, "t");
    require(t >= 2, "t must be >= 2, got " + s(t));
    require(d >= 2 && (d - 1) % (t - 1) == 0, "d must satisfy d = 1 mod (t-1) = 1 mod " + s(t - 1) + ", got " + s(d));
    const double side = dpow((d - 1) / (t - 1) + 1, t - 1);
    vertices = 2 * side;
    edges = d * side;
  } else if (name == "complete-bipartite") {
    const int n = param(params, "n");
    const int m = param(params, "m");
    require(n >= 1 && m >= 1, "part sizes must be positive");
    vertices = static_cast<double>(n) + m;
    edges = static_cast<double>(n) * m;
  } else if (name == "cycle") {
    const int n = param(params, "n");
    require(n >= 3, "n must be >= 3, got " + s(n));
    vertices = edges = n;
  } else if (name == "path") {
    const int n = param(params, "n");
    require(n >= 1, "n must be >= 1, got " + s(n));
    vertices = n;
    edges = n - 1;
  } else if (name == "complete") {
    const int n = param(params, "n");
    require(n >= 1, "n must be >= 1, got " + s(n));
    vertices = n;
    edges = static_cast<double>(n) * (n - 1) / 2;
  }
  check_size(caps.size, vertices, edges, name.c_str());
}

Built build_construction(const std::string& name, const Params& params, const Caps& caps) {
  validate_construction(name, params, caps);
  if (name == "cycle-product") {
    auto c = cycle_product(param(params, "d"), param(params, "t"), {caps.size, false});
    return {c.graph, labels_to_json(c)};
  }
  if (name == "cycle-3t") {
    auto c = cycle_3t_product(param(params, "d"), param(params, "t"), caps.size);
    return {c.graph, labels_to_json(c)};
  }
  if (name == "pg") {
    auto h = projective_plane_incidence(param(params, "q"), caps.size);
    return {h.graph, labels_to_json(h)};
  }
  if (name == "even-edge") {
    auto c = even_edge_construction(param(params, "d"), param(params, "t"), {caps.size, false});
    json labels = labels_to_json(c.product);
    labels["x"] = c.x;
    labels["y"] = c.y;
    return {c.product.graph, std::move(labels)};
  }
  if (name == "iterated") {
    auto h = iterated_product(param(params, "d"), param(params, "t"), caps.size);
    return {h.graph, labels_to_json(h)};
  }
  if (name == "complete-bipartite") {
    auto h = complete_bipartite(param(params, "n"), param(params, "m"));
    return {h.graph, labels_to_json(h)};
  }
  if (name == "cycle") {
    return {simple_cycle(param(params, "n")), json{{"kind", "plain"}}};
  }
  if (name == "path") {
    return {simple_path(param(params, "n")), json{{"kind", "plain"}}};
  }
  return {complete_graph(param(params, "n")), json{{"kind", "plain"}}};
}

std::string construction_key(const std::string& name, const Params& params) {
  std::string key = name;
  for (const auto& [k, v] : params) {
    key += "_" + k + std::to_string(v);
  }
  return key;
}

Graph load_or_build(const std::string& name, const Params& params, const Caps& caps) {
  validate_construction(name, params, caps);
  const char* dir = std::getenv("DCL_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') {
    return build_construction(name, params, caps).graph;
  }
  const std::filesystem::path path = std::filesystem::path(dir) / (construction_key(name, params) + ".col");
  if (std::filesystem::exists(path)) {
    return read_dimacs(path);
  }
  Graph g = build_construction(name, params, caps).graph;
  std::filesystem::create_directories(path.parent_path());
  // Write to a temporary name first so concurrent sweep jobs never read a
  // partial file.
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(construction_key(name, params)) ^
                                 static_cast<std::size_t>(std::chrono::steady_clock::now().time_since_epoch().count()));
  write_dimacs(tmp, g);
  std::filesystem::rename(tmp, path);
  return g;
}

std::optional<long long> known_chromatic_lower_bound(const std::string& name, const Params& params, int t,
                                                     PowerMode mode) {
  auto get = [&](const char* key) { return params.at(key); };
  auto ipow = [](long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
      r *= b;
    }
    return r;
  };
  if (name == "cycle-product" && mode == PowerMode::vertex && t == get("t")) {
    return ipow(get("d") / 2, t);
  }
  if (name == "pg") {
    const long long q = get("q");
    if (mode == PowerMode::vertex && t == 2) {
      return q * q + q + 1;
    }
    if (mode == PowerMode::edge && t == 3) {
      return (q * q + q + 1) * (q + 1);
    }
  }
  if (name == "iterated" && mode == PowerMode::edge && t == get("t")) {
    return get("d") * ipow((get("d") - 1) / (get("t") - 1) + 1, get("t") - 1);
  }
  if (name == "even-edge" && mode == PowerMode::edge && t == get("t")) {
    const int t1 = get("t") - 2;
    const int d1 = (t1 - 1) * get("d") / t1;
    const int d2 = get("d") / t1;
    return ipow(d1 / 2, t1) * d2 * (d1 / 2 + d2);
  }
  if (name == "complete-bipartite" && mode == PowerMode::edge && t == 2) {
    return static_cast<long long>(get("n")) * get("m");
  }
  if (name == "complete" && mode == PowerMode::vertex) {
    return get("n");
  }
  return std::nullopt;
}

Graph read_graph_file(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
    return graph_from_json(j);
  }
  if (ext == ".edges") {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    return read_edge_list(in);
  }
  return read_dimacs(path);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  const auto ext = path.extension().string();
  if (ext == ".json") {
    std::ofstream out(path);
    out << graph_to_json(g).dump() << '\n';
  } else if (ext == ".edges") {
    std::ofstream out(path);
    write_edge_list(out, g);
  } else {
    write_dimacs(path, g);
  }
}

json graph_summary(const Graph& g) {
  const auto gg = girth(g);
  json j{{"n", g.num_vertices()},
         {"m", g.num_edges()},
         {"maxDegree", g.max_degree()},
         {"minDegree", g.min_degree()},
         {"bipartite", is_bipartite(g)}};
  j["regular"] = g.num_vertices() > 0 && g.is_regular() ? json(g.max_degree()) : json(nullptr);
  j["girth"] = gg ? json(*gg) : json(nullptr);
  return j;
}

std::string summary_line(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << " m=" << g.num_edges() << " regular=";
  if (g.num_vertices() > 0 && g.is_regular()) {
    os << g.max_degree();
  } else {
    os << "no";
  }
  os << " bipartite=" << (is_bipartite(g) ? "yes" : "no");
  return os.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + item + "'");
    }
    if (used != item.size()) {
      throw InvalidArgument("not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace distcol::cli
