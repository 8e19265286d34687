#pragma once

#include <vector>

#include "distcol/graph.hpp"

namespace fixture {

using distcol::Edge;
using distcol::Graph;
using distcol::Vertex;

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
  }
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) {
    e.push_back({i, i + 1});
  }
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

/// K_{1,leaves} with centre 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) {
    e.push_back({0, i});
  }
  return Graph(leaves + 1, e);
}

/// K_{n,m} with parts 0..n-1 and n..n+m-1.
inline Graph complete_bipartite(int n, int m) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      e.push_back({i, n + j});
    }
  }
  return Graph(n + m, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

/// Heawood graph from its LCF notation [5,-5]^7.
inline Graph heawood() {
  std::vector<Edge> e;
  for (int i = 0; i < 14; ++i) {
    e.push_back({i, (i + 1) % 14});
    const int jump = i % 2 == 0 ? 5 : -5;
    const int j = ((i + jump) % 14 + 14) % 14;
    if (i < j) {
      e.push_back({i, j});
    }
  }
  return Graph(14, e);
}

/// Complete binary-ish tree with maximum degree 3 on n vertices.
inline Graph binary_tree(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    e.push_back({(i - 1) / 2, i});
  }
  return Graph(n, e);
}

}  // namespace fixture
