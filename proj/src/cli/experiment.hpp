#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "distcol/colouring.hpp"
#include "distcol/constructions.hpp"
#include "distcol/graph.hpp"

namespace distcol::cli {

struct Caps {
  SizeCap size;
  int exact_limit = kDefaultExactLimit;
  int cycle_cap = 16;
  std::size_t max_derived_vertices = 20000;
  std::size_t max_derived_edges = 5'000'000;

  nlohmann::json to_json() const;
};

using Params = std::map<std::string, int>;

struct ExperimentSpec {
  std::string command;
  std::string construction;  // empty when the graph comes from a file
  Params params;
  std::string graph_path;
  std::vector<std::string> statistics;
  int t = 1;
  int ell = 0;
  PowerMode mode = PowerMode::vertex;
  Method method = Method::greedy;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string csv_path;
  std::string log_path;
  Caps caps;

  nlohmann::json to_json() const;
};

struct ResultRecord {
  nlohmann::json spec;
  nlohmann::json graph;  // summary
  std::string statistic;
  std::string root;  // "v3" or "e1-2" for per-root statistics
  nlohmann::json value;
  nlohmann::json details;
  std::optional<double> bound;
  std::optional<bool> pass;
  std::optional<std::string> error;
  double duration_ms = 0;
  std::uint64_t seed = 0;

  bool ok() const { return !error && pass.value_or(true); }
  /// One JSON-lines entry, including the library version and a UTC timestamp.
  nlohmann::json to_json() const;
};

// ---- construction registry

struct ConstructionInfo {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<ConstructionInfo>& constructions();

/// Checks names, required parameters, preconditions and predicted size
/// against the caps. Throws InvalidArgument or TooLarge without building.
void validate_construction(const std::string& name, const Params& params, const Caps& caps);

struct Built {
  Graph graph;
  nlohmann::json labels;
};

Built build_construction(const std::string& name, const Params& params, const Caps& caps);

/// "cycle-product_d4_t3"
std::string construction_key(const std::string& name, const Params& params);

/// Builds the construction, or reads it from $DCL_CACHE_DIR/<key>.col when
/// that variable is set (writing the file on a miss).
Graph load_or_build(const std::string& name, const Params& params, const Caps& caps);

/// Known lower bound for a distance chromatic number of a construction, if
/// the construction certifies one for this (t, mode).
std::optional<long long> known_chromatic_lower_bound(const std::string& name, const Params& params, int t,
                                                     PowerMode mode);

// ---- graphs and files

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

nlohmann::json graph_summary(const Graph& g);
/// "n=14 m=21 regular=3 bipartite=yes"
std::string summary_line(const Graph& g);

// ---- tables

std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

std::vector<int> parse_int_list(const std::string& text);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace distcol::cli
