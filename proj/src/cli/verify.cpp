#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>

#include "commands.hpp"
#include "distcol/errors.hpp"
#include "distcol/verify.hpp"

namespace distcol::cli {

namespace {

struct VerifyOptions {
  std::string id;
  std::string d, t, q, k;
  int ell = 0;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string csv;
  Caps caps;
};

void print_table(std::ostream& out, const std::vector<CheckRow>& rows) {
  const std::vector<std::string> header = {"instance", "check", "value", "expected", "result"};
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
  }
  for (const auto& r : rows) {
    width[0] = std::max(width[0], r.instance.size());
    width[1] = std::max(width[1], r.check.size());
    width[2] = std::max(width[2], r.value.size());
    width[3] = std::max(width[3], r.expected.size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i + 1 == cells.size()) {
        out << cells[i] << '\n';
      } else {
        out << std::left << std::setw(static_cast<int>(width[i])) << cells[i] << "  ";
      }
    }
  };
  line(header);
  for (const auto& r : rows) {
    line({r.instance, r.check, r.value, r.expected, r.pass ? "PASS" : "FAIL"});
  }
}

int run_verify(const VerifyOptions& o, Io io) {
  SuiteParams params;
  try {
    params.d = parse_int_list(o.d);
    params.t = parse_int_list(o.t);
    params.q = parse_int_list(o.q);
    params.k = parse_int_list(o.k);
    params.ell = o.ell;
    params.trials = o.trials;
    params.seed = o.seed;
    params.cap = o.caps.size;
    params.exact_limit = o.caps.exact_limit;
    params.cycle_cap = o.caps.cycle_cap;
    params = resolve_suite_params(o.id, params);
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Stopwatch clock;
  const SuiteResult result = run_suite(o.id, params);
  print_table(io.out, result.rows);
  io.out << o.id << ": " << result.rows.size() - result.failures() << "/" << result.rows.size() << " checks passed ("
         << std::fixed << std::setprecision(2) << clock.elapsed_ms() / 1000.0 << " s)\n";

  const std::string csv = o.csv.empty() ? "verify_" + o.id + ".csv" : o.csv;
  std::ofstream file(csv);
  if (!file) {
    io.err << "error: cannot write " << csv << '\n';
    return kExitFailed;
  }
  write_csv_row(file, {"suite", "instance", "check", "value", "expected", "pass"});
  for (const auto& r : result.rows) {
    write_csv_row(file, {r.suite, r.instance, r.check, r.value, r.expected, r.pass ? "true" : "false"});
  }
  return result.passed() ? kExitOk : kExitFailed;
}

}  // namespace

void add_verify(CLI::App& app, Io io, int& exit_code) {
  auto opts = std::make_shared<VerifyOptions>();
  std::string ids;
  for (const auto& id : suite_ids()) {
    ids += (ids.empty() ? "" : " ") + id;
  }
  auto* sub = app.add_subcommand("verify", "Run an invariant suite over a parameter grid: " + ids);
  sub->add_option("id", opts->id, "suite id")->required()->check(CLI::IsMember(suite_ids()));
  sub->add_option("--d", opts->d, "comma-separated degrees");
  sub->add_option("--t", opts->t, "comma-separated distances");
  sub->add_option("--q", opts->q, "comma-separated prime orders");
  sub->add_option("--k", opts->k, "comma-separated k (forbidden C_2k)");
  sub->add_option("--l", opts->ell, "forbidden cycle length for theorem checks");
  sub->add_option("--trials", opts->trials, "random instances per configuration");
  sub->add_option("--seed", opts->seed, "seed for randomized suites")->capture_default_str();
  sub->add_option("--csv", opts->csv, "CSV output; default verify_<id>.csv");
  add_cap_flags(*sub, opts->caps);
  sub->callback([opts, io, &exit_code] { exit_code = run_verify(*opts, io); });
}

}  // namespace distcol::cli
