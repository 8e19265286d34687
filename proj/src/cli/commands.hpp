#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiment.hpp"

namespace distcol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

/// Options shared by every command that names a construction.
struct ConstructionFlags {
  std::optional<int> d, t, q, n, m;

  void add_to(CLI::App& app);
  /// Collects the flags the construction takes; --t is consumed only when the
  /// construction has a t parameter.
  Params params_for(const std::string& construction) const;
};

void add_cap_flags(CLI::App& app, Caps& caps);

// Registration: each adds a subcommand whose callback stores its exit code.
void add_construct(CLI::App& app, Io io, int& exit_code);
void add_verify(CLI::App& app, Io io, int& exit_code);
void add_measure(CLI::App& app, Io io, int& exit_code);
void add_sweep(CLI::App& app, Io io, int& exit_code);
void add_convert(CLI::App& app, Io io, int& exit_code);

/// Settings of a single statistic evaluation.
struct StatContext {
  std::string name;
  int t = 1;
  int ell = 0;
  int k = 0;
  std::optional<double> delta;
  PowerMode mode = PowerMode::vertex;
  Method method = Method::greedy;
  std::string variant = "plain";
  std::optional<Vertex> root;
  std::optional<Edge> root_edge;
  Caps caps;
  std::string construction;  // for known lower bounds; may be empty
  Params params;
  std::string colouring_path;
};

const std::vector<std::string>& statistic_names();

/// Evaluates one statistic. Library errors are caught and reported in the
/// record so that a run can continue. Per-root statistics return one record
/// per root.
std::vector<ResultRecord> measure_statistic(const Graph& g, const StatContext& ctx);

}  // namespace distcol::cli
