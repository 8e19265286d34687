#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "distcol/errors.hpp"
#include "distcol/serialize.hpp"

namespace distcol::cli {

using nlohmann::json;

namespace {

// A parsed sweep file. Parameter lists are sorted ascending and
// de-duplicated, so the cross product enumerates jobs in row order.
struct SweepSpec {
  std::string construction;
  std::map<std::string, std::vector<int>> ranges;
  std::vector<std::string> statistics;
  std::optional<int> t;
  int ell = 0;
  int k = 0;
  PowerMode mode = PowerMode::vertex;
  Method method = Method::greedy;
  std::string variant = "plain";
  std::uint64_t seed = 1;
  Caps caps;
  std::string output;
};

const std::set<std::string> kSpecKeys = {"construction", "params", "statistics", "t", "l", "k", "mode",
                                         "method", "variant", "seed", "caps", "output"};

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw InvalidArgument(what + " must be an integer");
  }
  return j.get<int>();
}

SweepSpec parse_sweep_spec(const json& j) {
  if (!j.is_object()) {
    throw InvalidArgument("sweep spec must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!kSpecKeys.contains(key)) {
      throw InvalidArgument("unknown sweep spec key '" + key + "'");
    }
  }
  SweepSpec s;
  if (!j.contains("construction") || !j["construction"].is_string()) {
    throw InvalidArgument("sweep spec needs a string 'construction'");
  }
  s.construction = j["construction"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) {
      throw InvalidArgument("'params' must be an object");
    }
    for (const auto& [key, value] : j["params"].items()) {
      std::vector<int> values;
      if (value.is_array()) {
        for (const auto& v : value) {
          values.push_back(as_int(v, "params." + key + " entries"));
        }
      } else {
        values.push_back(as_int(value, "params." + key));
      }
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      s.ranges[key] = std::move(values);
    }
  }
  if (!j.contains("statistics") || !j["statistics"].is_array() || j["statistics"].empty()) {
    throw InvalidArgument("sweep spec needs a non-empty 'statistics' array");
  }
  for (const auto& stat : j["statistics"]) {
    if (!stat.is_string()) {
      throw InvalidArgument("statistics must be strings");
    }
    const auto name = stat.get<std::string>();
    if (std::find(statistic_names().begin(), statistic_names().end(), name) == statistic_names().end()) {
      throw InvalidArgument("unknown statistic '" + name + "'");
    }
    s.statistics.push_back(name);
  }
  if (j.contains("t")) {
    s.t = as_int(j["t"], "t");
  }
  if (j.contains("l")) {
    s.ell = as_int(j["l"], "l");
  }
  if (j.contains("k")) {
    s.k = as_int(j["k"], "k");
  }
  if (j.contains("mode")) {
    s.mode = parse_mode(j["mode"].get<std::string>());
  }
  if (j.contains("method")) {
    const auto m = j["method"].get<std::string>();
    if (m != "greedy" && m != "exact") {
      throw InvalidArgument("method must be greedy or exact");
    }
    s.method = m == "exact" ? Method::exact : Method::greedy;
  }
  if (j.contains("variant")) {
    s.variant = j["variant"].get<std::string>();
  }
  if (j.contains("seed")) {
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("caps")) {
    const auto& c = j["caps"];
    s.caps.size.max_vertices = c.value("maxVertices", s.caps.size.max_vertices);
    s.caps.size.max_edges = c.value("maxEdges", s.caps.size.max_edges);
    s.caps.exact_limit = c.value("exactLimit", s.caps.exact_limit);
    s.caps.cycle_cap = c.value("cycleCap", s.caps.cycle_cap);
  }
  if (j.contains("output")) {
    s.output = j["output"].get<std::string>();
  }
  return s;
}

std::vector<Params> cross_product(const std::map<std::string, std::vector<int>>& ranges) {
  std::vector<Params> jobs{{}};
  for (const auto& [key, values] : ranges) {
    std::vector<Params> next;
    for (const auto& partial : jobs) {
      for (int v : values) {
        Params p = partial;
        p[key] = v;
        next.push_back(std::move(p));
      }
    }
    jobs = std::move(next);
  }
  return jobs;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

struct JobResult {
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
};

JobResult run_job(const SweepSpec& spec, const Params& params) {
  JobResult out;
  std::vector<std::string> prefix = {spec.construction};
  for (const auto& [key, value] : params) {
    prefix.push_back(std::to_string(value));
  }
  const int t = spec.t.value_or(params.contains("t") ? params.at("t") : 1);

  std::optional<Graph> g;
  std::string build_error;
  try {
    g = load_or_build(spec.construction, params, spec.caps);
  } catch (const Error& e) {
    build_error = e.what();
  }

  for (const auto& stat : spec.statistics) {
    std::vector<ResultRecord> records;
    if (g) {
      StatContext ctx;
      ctx.name = stat;
      ctx.t = t;
      ctx.ell = spec.ell;
      ctx.k = spec.k;
      ctx.mode = spec.mode;
      ctx.method = spec.method;
      ctx.variant = spec.variant;
      ctx.caps = spec.caps;
      ctx.construction = spec.construction;
      ctx.params = params;
      records = measure_statistic(*g, ctx);
    } else {
      ResultRecord rec;
      rec.statistic = stat;
      rec.error = build_error;
      records.push_back(std::move(rec));
    }
    for (const auto& rec : records) {
      out.ok = out.ok && rec.ok();
      std::vector<std::string> row = prefix;
      row.push_back(stat);
      row.push_back(std::to_string(t));
      row.push_back(to_string(spec.mode));
      row.push_back(rec.root);
      row.push_back(rec.error ? "error: " + *rec.error : (rec.value.is_null() ? "" : rec.value.dump()));
      std::string lower;
      std::string ratio;
      if (rec.bound) {
        lower = format_number(*rec.bound);
        if (*rec.bound > 0 && rec.value.is_number()) {
          ratio = format_number(rec.value.get<double>() / *rec.bound);
        }
      }
      row.push_back(lower);
      row.push_back(ratio);
      row.push_back(rec.pass ? (*rec.pass ? "true" : "false") : "");
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

struct SweepOptions {
  std::string spec_path;
  std::string out;
  int jobs = 1;
};

int run_sweep(const SweepOptions& o, Io io) {
  SweepSpec spec;
  std::vector<Params> jobs;
  try {
    std::ifstream in(o.spec_path);
    if (!in) {
      throw InvalidArgument("cannot open " + o.spec_path);
    }
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("sweep spec is not valid JSON: ") + e.what());
    }
    spec = parse_sweep_spec(j);
    jobs = cross_product(spec.ranges);
    bool empty_range = false;
    for (const auto& [key, values] : spec.ranges) {
      empty_range = empty_range || values.empty();
    }
    if (empty_range) {
      jobs.clear();
    }
    for (const auto& p : jobs) {
      validate_construction(spec.construction, p, spec.caps);
    }
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = run_job(spec, jobs[i]);
    }
  };
  const int threads = std::max(1, std::min<int>(o.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& th : pool) {
    th.join();
  }

  const std::string path = o.out.empty() ? spec.output : o.out;
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) {
      io.err << "error: cannot write " << path << '\n';
      return kExitFailed;
    }
  }
  std::ostream& csv = path.empty() ? io.out : file;
  std::vector<std::string> header = {"construction"};
  for (const auto& [key, values] : spec.ranges) {
    header.push_back(key);
  }
  for (const char* col : {"statistic", "stat_t", "stat_mode", "root", "value", "lower_bound", "ratio", "pass"}) {
    header.push_back(col);
  }
  write_csv_row(csv, header);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok;
    for (const auto& row : r.rows) {
      write_csv_row(csv, row);
    }
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

void add_sweep(CLI::App& app, Io io, int& exit_code) {
  auto opts = std::make_shared<SweepOptions>();
  auto* sub = app.add_subcommand("sweep", "Run statistics over the cross product of construction parameters (CSV)");
  sub->add_option("spec", opts->spec_path, "JSON sweep file")->required();
  sub->add_option("--out", opts->out, "CSV output path; default from the sweep file, else stdout");
  sub->add_option("--jobs", opts->jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sub->callback([opts, io, &exit_code] { exit_code = run_sweep(*opts, io); });
}

}  // namespace distcol::cli
