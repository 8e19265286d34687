#include "distcol/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "distcol/errors.hpp"

namespace distcol {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(std::istringstream& ss, std::size_t line_no, const char* what) {
  long long x = 0;
  if (!(ss >> x)) {
    fail(line_no, std::string("expected integer ") + what);
  }
  return x;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") {
      continue;
    }
    if (tag == "p") {
      if (n >= 0) {
        fail(line_no, "second problem line");
      }
      std::string format;
      ss >> format;
      if (format != "edge" && format != "col") {
        fail(line_no, "problem format must be 'edge'");
      }
      n = parse_int(ss, line_no, "vertex count");
      m = parse_int(ss, line_no, "edge count");
      if (n < 0 || m < 0 || n > std::numeric_limits<Vertex>::max()) {
        fail(line_no, "invalid problem size");
      }
      edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == "e") {
      if (n < 0) {
        fail(line_no, "edge before problem line");
      }
      const long long u = parse_int(ss, line_no, "endpoint");
      const long long v = parse_int(ss, line_no, "endpoint");
      if (u < 1 || v < 1 || u > n || v > n) {
        fail(line_no, "endpoint outside 1.." + std::to_string(n));
      }
      if (u == v) {
        fail(line_no, "self-loop");
      }
      edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) {
    throw ParseError("missing problem line");
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("problem line declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                     " were listed");
  }
  try {
    return Graph(static_cast<Vertex>(n), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Graph read_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
}

void write_dimacs(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  write_dimacs(out, g);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream ss;
  write_dimacs(ss, g);
  return ss.str();
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 0) {
    throw ParseError("edge list must start with the vertex count");
  }
  GraphBuilder b(static_cast<Vertex>(n));
  long long u = 0;
  long long v = 0;
  while (in >> u >> v) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("bad edge " + std::to_string(u) + " " + std::to_string(v));
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.eof()) {
    throw ParseError("trailing garbage in edge list");
  }
  return std::move(b).build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

}  // namespace distcol
