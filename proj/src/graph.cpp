#include "penta2p/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "penta2p/error.hpp"

namespace penta2p {

VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    Edge e = std::minmax(u, v);
    if (!seen.insert(e).second) continue;
    g.edges_.push_back(e);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& row = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  Vertex other = &row == &adjacency_[u] ? v : u;
  return std::binary_search(row.begin(), row.end(), other);
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& row : adjacency_) best = std::min(best, static_cast<int>(row.size()));
  return adjacency_.empty() ? 0 : best;
}

bool Graph::is_complete() const {
  const std::size_t n = adjacency_.size();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> parts;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    VertexSet part{root};
    label[root] = id;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex w : g.neighbors(part[head])) {
        if (label[w] < 0) {
          label[w] = id;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  std::vector<char> removed(n, 0);
  for (Vertex v : s) {
    if (!g.contains(v)) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
    removed[v] = 1;
  }
  InducedSubgraph out;
  out.old_to_new.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  if (out.new_to_old.empty() && n > 0) throw Error(ErrorCode::FullRemoval, "cannot remove every vertex");
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) kept.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), kept);
  return out;
}

namespace {

// Residual network for the vertex-split construction: node 2v is v_in,
// node 2v+1 is v_out, and the arc v_in -> v_out has capacity one.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v);
      add_arc(2 * v + 1, 2 * u);
    }
  }

  // Augments from s_out to t_in until `cap` paths are found or none remain.
  int max_flow(Vertex s, Vertex t, int cap) {
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      via[source] = -2;
      std::queue<int> frontier;
      frontier.push(source);
      while (!frontier.empty() && via[sink] == -1) {
        int node = frontier.front();
        frontier.pop();
        for (int arc : head_[node]) {
          int to = arcs_[arc].to;
          if (arcs_[arc].residual > 0 && via[to] == -1) {
            via[to] = arc;
            frontier.push(to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int node = sink; node != source;) {
        int arc = via[node];
        --arcs_[arc].residual;
        ++arcs_[arc ^ 1].residual;
        node = arcs_[arc ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int residual;
  };

  void add_arc(int from, int to) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (!g.contains(s) || !g.contains(t)) throw Error(ErrorCode::OutOfRange, "local_connectivity endpoint");
  SplitNetwork net(g);
  return net.max_flow(s, t, cap);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;

  // A minimum cut either misses the min-degree vertex v, separating it from
  // some non-neighbour, or contains v and separates two of its neighbours.
  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  int best = g.degree(v);
  for (Vertex w = 0; w < n && best > 0; ++w) {
    if (w == v || g.adjacent(v, w)) continue;
    best = std::min(best, local_connectivity(g, v, w, best));
  }
  auto nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      if (g.adjacent(nv[i], nv[j])) continue;
      best = std::min(best, local_connectivity(g, nv[i], nv[j], best));
    }
  }
  return best;
}

bool is_biconnected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  // Iterative Tarjan lowpoint search from vertex 0.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex u = stack.back();
    auto nu = g.neighbors(u);
    if (next[u] < nu.size()) {
      Vertex w = nu[next[u]++];
      if (disc[w] < 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[u];
    if (p >= 0) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) return false;
    }
  }
  return root_children <= 1;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

MatchingBound matching_upper_bound(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  MatchingBound out;
  const VertexSet cut = make_vertex_set(s);
  if (static_cast<int>(cut.size()) < n) {
    auto rest = remove_vertices(g, cut);
    for (const auto& part : components(rest.graph)) {
      if (part.size() % 2 == 1) ++out.odd_components;
    }
  } else {
    for (Vertex v : cut) {
      if (!g.contains(v)) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
    }
  }
  out.bound = (n - out.odd_components + static_cast<int>(cut.size())) / 2;
  return out;
}

ConnectivityBound connectivity_upper_bound(int k) {
  if (k < 1) throw Error(ErrorCode::NonPositiveK, "crossing budget must be at least 1");
  const double root = std::sqrt(static_cast<double>(k));
  ConnectivityBound out;
  out.edge_coeff = 3.81 * root;
  out.kappa_bound = static_cast<int>(std::floor(7.62 * root + 1e-12));
  return out;
}

}  // namespace penta2p
