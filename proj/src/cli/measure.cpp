#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>

#include "commands.hpp"
#include "distcol/analysis.hpp"
#include "distcol/errors.hpp"
#include "distcol/graph_ops.hpp"
#include "distcol/serialize.hpp"

namespace distcol::cli {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string vertex_root(Vertex v) { return "v" + std::to_string(v); }
std::string edge_root(Edge e) { return "e" + std::to_string(e.u) + "-" + std::to_string(e.v); }

Bipartition bipartition_of(const Graph& g) {
  const auto colours = two_colouring(g);
  if (!colours) {
    throw NotBipartite("graph is not bipartite");
  }
  Bipartition h{g, {}, {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ((*colours)[static_cast<std::size_t>(v)] == 0 ? h.part_a : h.part_b).push_back(v);
  }
  return h;
}

void require_positive(int value, const char* flag) {
  if (value <= 0) {
    throw InvalidArgument(std::string("statistic needs ") + flag);
  }
}

void measure_pathpairs(const Graph& g, const StatContext& ctx, std::vector<ResultRecord>& out) {
  auto record = [&](const PathPairReport& r, std::string root) {
    ResultRecord rec;
    rec.statistic = ctx.name;
    rec.root = std::move(root);
    rec.value = r.path_count;
    rec.details = to_json(r);
    out.push_back(std::move(rec));
  };
  if (ctx.variant == "edge") {
    if (ctx.root_edge) {
      record(edge_path_pair_statistic(g, *ctx.root_edge, ctx.t), edge_root(*ctx.root_edge));
      return;
    }
    for (const auto& e : g.edges()) {
      record(edge_path_pair_statistic(g, e, ctx.t), edge_root(e));
    }
    return;
  }
  PathVariant variant = PathVariant::plain;
  if (ctx.variant == "peripheral") {
    variant = PathVariant::peripheral;
  } else if (ctx.variant != "plain") {
    throw InvalidArgument("variant must be plain, peripheral or edge, got '" + ctx.variant + "'");
  }
  if (ctx.root) {
    record(path_pair_statistic(g, *ctx.root, ctx.t, variant), vertex_root(*ctx.root));
    return;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    record(path_pair_statistic(g, v, ctx.t, variant), vertex_root(v));
  }
}

void measure_one(const Graph& g, const StatContext& ctx, std::vector<ResultRecord>& out) {
  ResultRecord rec;
  rec.statistic = ctx.name;
  const std::string& s = ctx.name;
  if (s == "girth") {
    rec.value = optional_int(girth(g));
  } else if (s == "odd-girth") {
    rec.value = optional_int(odd_girth(g));
  } else if (s == "cycle") {
    require_positive(ctx.ell, "--l");
    const auto cycle = find_cycle(g, ctx.ell, ctx.caps.cycle_cap);
    rec.value = cycle.has_value();
    if (cycle) {
      rec.details = json{{"witness", *cycle}};
    }
  } else if (s == "bunched") {
    const Bipartition h = bipartition_of(g);
    double delta = 0;
    if (ctx.delta) {
      delta = *ctx.delta;
    } else {
      require_positive(ctx.k, "--delta or --k");
      delta = bunched_delta(ctx.k, h.part_a.size());
    }
    const auto res = bunched_edge_count(h, delta);
    rec.value = res.count;
    rec.details = json{{"delta", delta}, {"partA", h.part_a.size()}};
    if (ctx.k > 0) {
      const auto check = lemma8_bound_holds(h, ctx.k, ctx.caps.cycle_cap);
      rec.bound = check.bound;
      rec.pass = check.holds;
    }
  } else if (s == "density") {
    DensityOptions options;
    options.max_derived_vertices = ctx.caps.max_derived_vertices;
    options.max_derived_edges = ctx.caps.max_derived_edges;
    const auto report = aks_density_profile(g, ctx.t, ctx.mode, options);
    rec.value = std::isfinite(report.implied_f) ? json(report.implied_f) : json(nullptr);
    rec.details = to_json(report);
  } else if (s == "pathpairs") {
    measure_pathpairs(g, ctx, out);
    return;
  } else if (s == "colour") {
    const auto chi = distance_chromatic(g, ctx.t, ctx.mode, ctx.method, static_cast<Vertex>(ctx.caps.exact_limit));
    rec.value = chi.value;
    rec.details = json{{"method", ctx.method == Method::exact ? "exact" : "greedy"}};
    if (!ctx.construction.empty()) {
      if (auto lower = known_chromatic_lower_bound(ctx.construction, ctx.params, ctx.t, ctx.mode)) {
        rec.bound = static_cast<double>(*lower);
        rec.pass = chi.value >= *lower;
      }
    }
    if (!ctx.colouring_path.empty()) {
      std::ofstream(ctx.colouring_path) << to_json(chi.colouring).dump() << '\n';
    }
  } else if (s == "theorem") {
    require_positive(ctx.ell, "--l");
    const auto res = theorem_constant_check(g, ctx.t, ctx.ell, ctx.mode, ctx.caps.cycle_cap);
    rec.value = res.max_count;
    rec.bound = res.bound;
    rec.pass = res.holds;
    rec.details = to_json(res);
  } else if (s == "pikhurko") {
    require_positive(ctx.k, "--k");
    const auto res = pikhurko_bound_check(g, ctx.k, ctx.caps.cycle_cap);
    rec.value = res.edges;
    rec.bound = res.bound;
    rec.pass = res.holds;
  } else {
    throw InvalidArgument("unknown statistic '" + s + "'");
  }
  out.push_back(std::move(rec));
}

struct MeasureOptions {
  std::string graph;
  std::string construct;
  ConstructionFlags flags;
  std::vector<std::string> stats;
  std::optional<int> stat_t;
  int ell = 0;
  int k = 0;
  std::optional<double> delta;
  std::string mode = "vertex";
  std::string method = "greedy";
  std::string variant = "plain";
  std::optional<Vertex> root;
  std::string root_edge;
  std::uint64_t seed = 1;
  std::string csv;
  std::string log;
  std::string colouring;
  Caps caps;
};

Edge parse_edge(const std::string& text) {
  const auto parts = parse_int_list(text);
  if (parts.size() != 2) {
    throw InvalidArgument("--root-edge expects 'u,v', got '" + text + "'");
  }
  return make_edge(parts[0], parts[1]);
}

int run_measure(const MeasureOptions& o, Io io) {
  ExperimentSpec spec;
  StatContext ctx;
  Graph g;
  std::string graph_name;
  try {
    if (o.graph.empty() == o.construct.empty()) {
      throw InvalidArgument("give exactly one of --graph or --construct");
    }
    spec.command = "measure";
    spec.statistics = o.stats;
    spec.ell = o.ell;
    spec.mode = parse_mode(o.mode);
    if (o.method != "greedy" && o.method != "exact") {
      throw InvalidArgument("method must be greedy or exact, got '" + o.method + "'");
    }
    spec.method = o.method == "exact" ? Method::exact : Method::greedy;
    spec.seed = o.seed;
    spec.caps = o.caps;
    spec.csv_path = o.csv;
    spec.log_path = o.log;
    for (const auto& s : o.stats) {
      if (std::find(statistic_names().begin(), statistic_names().end(), s) == statistic_names().end()) {
        throw InvalidArgument("unknown statistic '" + s + "'");
      }
    }
    if (!o.construct.empty()) {
      spec.construction = o.construct;
      spec.params = o.flags.params_for(o.construct);
      validate_construction(spec.construction, spec.params, spec.caps);
      graph_name = construction_key(spec.construction, spec.params);
    } else {
      spec.graph_path = o.graph;
      graph_name = o.graph;
    }
    spec.t = o.stat_t.value_or(o.flags.t.value_or(1));

    ctx.t = spec.t;
    ctx.ell = o.ell;
    ctx.k = o.k;
    ctx.delta = o.delta;
    ctx.mode = spec.mode;
    ctx.method = spec.method;
    ctx.variant = o.variant;
    ctx.root = o.root;
    if (!o.root_edge.empty()) {
      ctx.root_edge = parse_edge(o.root_edge);
    }
    ctx.caps = o.caps;
    ctx.construction = spec.construction;
    ctx.params = spec.params;
    ctx.colouring_path = o.colouring;

    g = spec.construction.empty() ? read_graph_file(spec.graph_path)
                                  : load_or_build(spec.construction, spec.params, spec.caps);
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream log_file;
  if (!o.log.empty()) {
    log_file.open(o.log);
  }
  std::ostream& log = o.log.empty() ? io.out : log_file;
  std::ofstream csv;
  if (!o.csv.empty()) {
    csv.open(o.csv);
    write_csv_row(csv, {"graph", "root", "statistic", "value", "bound", "pass"});
  }

  const json summary = graph_summary(g);
  const json spec_json = spec.to_json();
  bool all_ok = true;
  for (const auto& stat : o.stats) {
    ctx.name = stat;
    for (auto& rec : measure_statistic(g, ctx)) {
      rec.spec = spec_json;
      rec.graph = summary;
      rec.seed = spec.seed;
      all_ok = all_ok && rec.ok();
      log << rec.to_json().dump() << '\n';
      if (csv.is_open()) {
        write_csv_row(csv, {graph_name, rec.root, rec.statistic, rec.error ? "error: " + *rec.error : rec.value.dump(),
                            rec.bound ? json(*rec.bound).dump() : "", rec.pass ? (*rec.pass ? "true" : "false") : ""});
      }
    }
  }
  return all_ok ? kExitOk : kExitFailed;
}

}  // namespace

const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names = {"girth",  "odd-girth", "cycle",   "bunched", "density",
                                                 "pathpairs", "colour", "theorem", "pikhurko"};
  return names;
}

std::vector<ResultRecord> measure_statistic(const Graph& g, const StatContext& ctx) {
  std::vector<ResultRecord> out;
  const Stopwatch clock;
  try {
    measure_one(g, ctx, out);
  } catch (const Error& e) {
    out.clear();
    ResultRecord rec;
    rec.statistic = ctx.name;
    rec.error = e.what();
    out.push_back(std::move(rec));
  }
  const double each = out.empty() ? 0 : clock.elapsed_ms() / static_cast<double>(out.size());
  for (auto& rec : out) {
    rec.duration_ms = each;
  }
  return out;
}

void add_measure(CLI::App& app, Io io, int& exit_code) {
  auto opts = std::make_shared<MeasureOptions>();
  auto* sub = app.add_subcommand("measure", "Evaluate statistics on a graph file or a construction (JSON-lines output)");
  sub->add_option("--graph", opts->graph, "graph file (.col, .json or .edges)");
  sub->add_option("--construct", opts->construct, "construction name");
  opts->flags.add_to(*sub);
  sub->add_option("--stat", opts->stats, "statistic(s): girth odd-girth cycle bunched density pathpairs colour theorem pikhurko")
      ->required()
      ->delimiter(',');
  sub->add_option("--stat-t", opts->stat_t, "distance for the statistic when it differs from --t");
  sub->add_option("--l", opts->ell, "cycle length");
  sub->add_option("--k", opts->k, "k for C_2k-free bounds");
  sub->add_option("--delta", opts->delta, "degree threshold for bunched edges");
  sub->add_option("--mode", opts->mode, "vertex or edge")->capture_default_str();
  sub->add_option("--method", opts->method, "greedy or exact")->capture_default_str();
  sub->add_option("--variant", opts->variant, "plain, peripheral or edge")->capture_default_str();
  sub->add_option("--root", opts->root, "root vertex for path statistics (default: all)");
  sub->add_option("--root-edge", opts->root_edge, "root edge 'u,v' for the edge variant (default: all)");
  sub->add_option("--seed", opts->seed, "seed recorded with every result")->capture_default_str();
  sub->add_option("--csv", opts->csv, "also write a CSV table");
  sub->add_option("--log", opts->log, "write JSON-lines here instead of stdout");
  sub->add_option("--colouring", opts->colouring, "write the colouring found by --stat colour as JSON");
  add_cap_flags(*sub, opts->caps);
  sub->callback([opts, io, &exit_code] { exit_code = run_measure(*opts, io); });
}

}  // namespace distcol::cli
