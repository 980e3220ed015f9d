#pragma once

// Brute-force reference implementations for small graphs. They share no code
// with the library beyond the Graph accessors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "penta2p/graph.hpp"

namespace oracle {

using penta2p::Edge;
using penta2p::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

inline bool has_ham_cycle(const Graph& g) {
  const int n = g.order();
  const auto adj = matrix(g);
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = adj[0][perm.front()] && adj[perm.back()][0];
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = adj[perm[i]][perm[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool has_ham_path(const Graph& g, int s, int t) {
  const int n = g.order();
  const auto adj = matrix(g);
  std::vector<int> middle;
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t) middle.push_back(v);
  }
  do {
    std::vector<int> walk{s};
    walk.insert(walk.end(), middle.begin(), middle.end());
    walk.push_back(t);
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < walk.size(); ++i) ok = adj[walk[i]][walk[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

// Connectivity of the vertices outside `removed` (bitmask), by DFS.
inline bool connected_without(const std::vector<std::vector<bool>>& adj, std::uint32_t removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed >> v & 1)) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (adj[v][w] && !seen[w] && !(removed >> w & 1)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

// Smallest vertex cut over all subsets, n - 1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  const auto adj = matrix(g);
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(adj, mask)) best = size;
  }
  return best;
}

// Shortest cycle by enumerating simple paths from each minimum vertex.
inline int girth(const Graph& g) {
  const int n = g.order();
  const auto adj = matrix(g);
  int best = 0;
  std::vector<int> path;
  std::vector<bool> on(n, false);
  auto extend = [&](auto&& self, int start, int v) -> void {
    for (int w = start + 1; w < n; ++w) {
      if (!adj[v][w] || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      if (path.size() >= 3 && adj[w][start]) {
        const int len = static_cast<int>(path.size());
        if (best == 0 || len < best) best = len;
      }
      self(self, start, w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on.assign(n, false);
    on[s] = true;
    extend(extend, s, s);
  }
  return best;  // 0 for forests
}

inline int max_matching(const Graph& g) {
  const int n = g.order();
  const auto adj = matrix(g);
  std::vector<bool> used(n, false);
  auto best_from = [&](auto&& self, int v) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = true;
    int best = self(self, v + 1);
    for (int w = v + 1; w < n; ++w) {
      if (adj[v][w] && !used[w]) {
        used[w] = true;
        best = std::max(best, 1 + self(self, v + 1));
        used[w] = false;
      }
    }
    used[v] = false;
    return best;
  };
  return best_from(best_from, 0);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return penta2p::build_graph(n, edges);
}

}  // namespace oracle
