// Finite simple graphs (no loops, no multi-edges); the carrier of a zigzag
// algebra and of the K-matrix bookkeeping.

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "minorb/dynkin.hpp"

namespace minorb {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

  static Graph of_dynkin(const DynkinType& t) {
    Graph g;
    g.n = t.rank;
    IntMat c = cartan_matrix(t);
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if (c[i][j] != 0) g.edges.emplace_back(i, j);
    return g;
  }

  static Graph path(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
  }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
      if (a == v || b == v) ++d;
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == n;
  }

  bool is_tree() const { return connected() && static_cast<int>(edges.size()) == n - 1; }

  // Unique vertex of degree 3, or -1 if there is none.
  int trivalent_vertex() const {
    int found = -1;
    for (int v = 0; v < n; ++v)
      if (degree(v) == 3) {
        if (found >= 0) return -1;
        found = v;
      }
    return found;
  }
};

}  // namespace minorb
