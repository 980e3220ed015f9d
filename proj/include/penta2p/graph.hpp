#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace penta2p {

/// Vertex ids are dense integers in [0, n) throughout the library.
using Vertex = int;

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> members);

/**
   Finite simple undirected graph.

   Adjacency lists are kept sorted. The edge list remembers the order in
   which edges were first inserted (normalized to u < v), which is the
   order used by every serializer.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws OutOfRange on an id outside [0, n) and LoopEdge on (v, v).
  /// Repeated pairs are collapsed onto their first occurrence.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const& { return adjacency_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const&& = delete;
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  std::span<const Edge> edges() const& { return edges_; }
  std::span<const Edge> edges() const&& = delete;

  int min_degree() const;
  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

/// Result of deleting a vertex set. `old_to_new[v]` is -1 for removed vertices.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

/// Subgraph induced on V(g) \ s with dense relabeling. Throws FullRemoval if
/// s covers every vertex and OutOfRange on a bad id.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s != t, computed by unit-capacity augmenting paths on the split graph.
/// Stops early once `cap` paths are found.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

/// kappa(g): n - 1 for complete graphs, 0 for disconnected graphs, otherwise
/// the size of a minimum vertex cut.
int vertex_connectivity(const Graph& g);

/// true iff g is connected, has at least 3 vertices and no cut vertex.
bool is_biconnected(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct MatchingBound {
  int odd_components = 0;
  int bound = 0;
};

/// Tutte-Berge style upper bound on the matching number of g witnessed by
/// deleting s: floor((n - odd(g - s) + |s|) / 2).
MatchingBound matching_upper_bound(const Graph& g, const VertexSet& s);

struct ConnectivityBound {
  double edge_coeff = 0.0;
  int kappa_bound = 0;
};

/// Density bound for k-planar graphs, |E| <= 3.81 sqrt(k) n, and the
/// resulting ceiling kappa <= delta <= 7.62 sqrt(k). Throws NonPositiveK.
ConnectivityBound connectivity_upper_bound(int k);

}  // namespace penta2p
