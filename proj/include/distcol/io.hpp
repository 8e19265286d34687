#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "distcol/graph.hpp"

namespace distcol {

// DIMACS-like text format:
//
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (m lines, 1-based endpoints)
//
// The writer emits no comments and lists edges in lexicographic order, so a
// file produced by `write_dimacs` reads back to an identical graph and
// rewrites byte-for-byte.

Graph read_dimacs(std::istream& in);
Graph read_dimacs(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs(const std::filesystem::path& path, const Graph& g);
std::string to_dimacs(const Graph& g);

// Plain 0-based edge list, "u v" per line, preceded by a line with n.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace distcol
