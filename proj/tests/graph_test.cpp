#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "penta2p/error.hpp"
#include "penta2p/generators.hpp"
#include "penta2p/graph.hpp"
#include "penta2p/op_drawing.hpp"

namespace penta2p {
namespace {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::ParseError;
}

TEST(BuildGraph, EmptyTriangleAndDedup) {
  EXPECT_EQ(build_graph(0, {}).size(), 0u);
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
  const Graph t = build_graph(3, tri);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_TRUE(t.adjacent(2, 0));
  const std::vector<Edge> twice{{0, 1}, {0, 1}};
  EXPECT_EQ(build_graph(4, twice).size(), 1u);
}

TEST(BuildGraph, Errors) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> wide{{0, 3}};
  EXPECT_EQ(code_of([&] { build_graph(3, loop); }), ErrorCode::LoopEdge);
  EXPECT_EQ(code_of([&] { build_graph(3, wide); }), ErrorCode::OutOfRange);
}

TEST(BuildGraph, AdjacencySortedAndSymmetric) {
  const std::vector<Edge> edges{{3, 0}, {2, 0}, {1, 3}, {0, 1}};
  const Graph g = build_graph(4, edges);
  std::size_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb) EXPECT_TRUE(g.adjacent(w, v));
    total += nb.size();
  }
  EXPECT_EQ(total, 2 * g.size());
}

TEST(Components, Examples) {
  EXPECT_EQ(components(cycle(3)).size(), 1u);
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const auto parts = components(build_graph(5, edges));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1}));
  EXPECT_EQ(parts[1], (VertexSet{2, 3}));
  EXPECT_EQ(parts[2], (VertexSet{4}));
}

TEST(Components, PartitionOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 12, 0.12);
    std::vector<int> seen(g.order(), 0);
    const auto parts = components(g);
    std::vector<int> part_of(g.order(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (Vertex v : parts[i]) {
        ++seen[v];
        part_of[v] = static_cast<int>(i);
      }
    }
    for (int c : seen) EXPECT_EQ(c, 1);
    for (auto [u, v] : g.edges()) EXPECT_EQ(part_of[u], part_of[v]);
    for (const auto& part : parts) {
      const auto rest = remove_vertices(g, [&] {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (!std::binary_search(part.begin(), part.end(), v)) out.push_back(v);
        }
        return make_vertex_set(out);
      }());
      EXPECT_TRUE(is_connected(rest.graph));
    }
  }
}

TEST(RemoveVertices, Examples) {
  const auto one = remove_vertices(cycle(3), {2});
  EXPECT_EQ(one.graph.order(), 2);
  EXPECT_EQ(one.graph.size(), 1u);
  EXPECT_EQ(one.old_to_new[2], -1);
  EXPECT_EQ(one.new_to_old, (std::vector<Vertex>{0, 1}));

  EXPECT_EQ(remove_vertices(complete(4), {}).graph, complete(4));

  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const auto leaves = remove_vertices(build_graph(5, star), {0});
  EXPECT_EQ(leaves.graph.order(), 4);
  EXPECT_EQ(leaves.graph.size(), 0u);

  EXPECT_EQ(code_of([] { remove_vertices(cycle(3), {0, 1, 2}); }), ErrorCode::FullRemoval);
}

TEST(VertexConnectivity, CompleteGraphs) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(vertex_connectivity(complete(n)), n - 1) << n;
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(dodecahedron().graph()), 3);
  EXPECT_EQ(vertex_connectivity(cycle(6)), 2);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  EXPECT_EQ(vertex_connectivity(build_graph(4, split)), 0);
  EXPECT_GE(vertex_connectivity(abstract_graph(insert_pentagrams(dodecahedron()))), 4);
}

TEST(VertexConnectivity, DodecahedronHasNoTwoCut) {
  // Exhaustive over pairs: removing any two vertices leaves it connected.
  const Graph g = dodecahedron().graph();
  for (Vertex a = 0; a < 20; ++a) {
    for (Vertex b = a + 1; b < 20; ++b) EXPECT_TRUE(is_connected(remove_vertices(g, {a, b}).graph));
  }
}

TEST(VertexConnectivity, MatchesSubsetBruteForce) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> order(2, 8);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    EXPECT_EQ(vertex_connectivity(g), oracle::vertex_connectivity(g)) << "trial " << trial;
  }
}

TEST(Girth, Examples) {
  const std::vector<Edge> tree{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  EXPECT_FALSE(girth(build_graph(5, tree)).has_value());
  EXPECT_EQ(girth(dodecahedron().graph()), 5);
  EXPECT_EQ(girth(prism(4).graph()), 4);
  EXPECT_EQ(girth(cycle(7)), 7);
}

TEST(Girth, MatchesCycleEnumeration) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> order(3, 8);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    EXPECT_EQ(girth(g).value_or(0), oracle::girth(g)) << "trial " << trial;
  }
}

TEST(MatchingUpperBound, Examples) {
  const std::vector<Edge> edge{{0, 1}};
  auto b = matching_upper_bound(build_graph(2, edge), {});
  EXPECT_EQ(b.odd_components, 0);
  EXPECT_EQ(b.bound, 1);
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  b = matching_upper_bound(build_graph(4, star), {0});
  EXPECT_EQ(b.odd_components, 3);
  EXPECT_EQ(b.bound, 1);
}

TEST(MatchingUpperBound, NeverBelowMaximumMatching) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> order(1, 10);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = order(rng);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const int nu = oracle::max_matching(g);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    EXPECT_GE(matching_upper_bound(g, make_vertex_set(s)).bound, nu);
  }
}

TEST(ConnectivityUpperBound, Values) {
  auto b = connectivity_upper_bound(1);
  EXPECT_DOUBLE_EQ(b.edge_coeff, 3.81);
  EXPECT_EQ(b.kappa_bound, 7);
  b = connectivity_upper_bound(2);
  EXPECT_NEAR(b.edge_coeff, 5.388, 5e-4);
  EXPECT_EQ(b.kappa_bound, 10);
  b = connectivity_upper_bound(4);
  EXPECT_DOUBLE_EQ(b.edge_coeff, 7.62);
  EXPECT_EQ(b.kappa_bound, 15);
  EXPECT_EQ(code_of([] { connectivity_upper_bound(0); }), ErrorCode::NonPositiveK);
}

}  // namespace
}  // namespace penta2p
