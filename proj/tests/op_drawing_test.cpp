#include <gtest/gtest.h>

#include "penta2p/error.hpp"
#include "penta2p/generators.hpp"
#include "penta2p/op_drawing.hpp"

namespace penta2p {
namespace {

using Rotations = std::vector<std::vector<Vertex>>;

std::vector<PlaneMap> pentagulations() {
  return {dodecahedron(), theorem2_pentagulation(5, gadget_h()), theorem2_pentagulation(5, gadget_f()),
          theorem2_pentagulation(6, gadget_f()), theorem2_pentagulation(7, gadget_h())};
}

TEST(InsertPentagrams, Dodecahedron) {
  const OpDrawing d = insert_pentagrams(dodecahedron());
  EXPECT_EQ(d.pentagrams.size(), 12u);
  const Graph g = abstract_graph(d);
  EXPECT_EQ(g.order(), 20);
  EXPECT_EQ(g.size(), 90u);
  EXPECT_TRUE(check_optimal_edge_count(g));
  EXPECT_TRUE(validate_op_drawing(d).empty());
}

TEST(InsertPentagrams, GadgetConstruction) {
  const Graph g = abstract_graph(insert_pentagrams(theorem2_pentagulation(5, gadget_h())));
  EXPECT_EQ(g.order(), 137);
  EXPECT_EQ(g.size(), 675u);
  const Graph f = abstract_graph(insert_pentagrams(theorem2_pentagulation(6, gadget_f())));
  EXPECT_EQ(f.order(), 206);
  EXPECT_EQ(f.size(), 1020u);
  EXPECT_TRUE(check_optimal_edge_count(f));
}

TEST(InsertPentagrams, Rejections) {
  const PlaneMap c5(Rotations{{4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}});
  ASSERT_TRUE(is_pentagulation(c5));
  try {
    insert_pentagrams(c5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotThreeConnected);
  }
  try {
    insert_pentagrams(prism(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPentagulation);
  }
}

TEST(Pentagram, ChordsAndCrossings) {
  const Pentagram p = Pentagram::from_boundary(3, {10, 11, 12, 13, 14});
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(p.chords[i], (Edge{p.boundary[i], p.boundary[(i + 2) % 5]}));
  }
  std::array<int, 5> uses{};
  for (int i = 0; i < 5; ++i) {
    auto [a, b] = Pentagram::crossing(i);
    ++uses[a];
    ++uses[b];
    // Crossing chords share no endpoint.
    const auto ca = p.chords[a], cb = p.chords[b];
    EXPECT_NE(ca.first, cb.first);
    EXPECT_NE(ca.first, cb.second);
    EXPECT_NE(ca.second, cb.first);
    EXPECT_NE(ca.second, cb.second);
  }
  for (int u : uses) EXPECT_EQ(u, 2);
}

TEST(AbstractGraph, FacesBecomeCliques) {
  for (const auto& p : pentagulations()) {
    const OpDrawing d = insert_pentagrams(p);
    const Graph g = abstract_graph(d);
    EXPECT_TRUE(check_optimal_edge_count(g));
    for (const auto& face : faces(p)) {
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) EXPECT_TRUE(g.adjacent(face.boundary[i], face.boundary[j]));
      }
    }
  }
}

TEST(AbstractGraph, DuplicateChordRejected) {
  OpDrawing d = insert_pentagrams(dodecahedron());
  d.pentagrams[1].chords[0] = d.pentagrams[0].chords[0];
  EXPECT_THROW(abstract_graph(d), Error);
  EXPECT_FALSE(validate_op_drawing(d).empty());
}

TEST(PlanarSkeleton, RoundTrip) {
  for (const auto& p : pentagulations()) {
    const OpDrawing d = insert_pentagrams(p);
    EXPECT_EQ(planar_skeleton(d), p);
    EXPECT_EQ(insert_pentagrams(planar_skeleton(d)), d);
    EXPECT_TRUE(is_pentagulation(planar_skeleton(d)));
    EXPECT_EQ(3 * static_cast<long>(p.edge_count()), 5L * (p.order() - 2));
  }
}

TEST(OptimalEdgeCount, Examples) {
  std::vector<Edge> k5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  }
  EXPECT_FALSE(check_optimal_edge_count(build_graph(5, k5)));
}

TEST(Crossings, ChordsTwiceSkeletonNever) {
  for (const auto& p : pentagulations()) {
    const OpDrawing d = insert_pentagrams(p);
    const auto counts = crossings_per_edge(d);
    const Graph skeleton = p.graph();
    const Graph g = abstract_graph(d);
    EXPECT_EQ(counts.size(), g.size());
    int max_count = 0;
    for (const auto& [e, c] : counts) {
      EXPECT_EQ(c, skeleton.adjacent(e.first, e.second) ? 0 : 2);
      max_count = std::max(max_count, c);
    }
    EXPECT_EQ(max_count, 2);
  }
}

TEST(Planarize, Dodecahedron) {
  const OpDrawing d = insert_pentagrams(dodecahedron());
  const PlaneMap p = planarize(d);
  const auto report = validate_map(p);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(p.order(), 80);
  // Each chord becomes a 3-edge path: 30 + 60 * 3 edges.
  EXPECT_EQ(p.edge_count(), 210u);
  const Graph g = p.graph();
  for (Vertex v = 20; v < 80; ++v) EXPECT_EQ(g.degree(v), 4);
  for (Vertex v = 0; v < 20; ++v) EXPECT_EQ(g.degree(v), 9);
  // A pentagram splits a pentagon into a central pentagon, five triangles
  // and five quadrilaterals.
  const auto f = faces(p);
  EXPECT_EQ(f.size(), 12u * 11);
}

TEST(Planarize, ChordPathOrder) {
  const OpDrawing d = insert_pentagrams(dodecahedron());
  const Graph g = planarize(d).graph();
  for (const auto& pg : d.pentagrams) {
    for (int i = 0; i < 5; ++i) {
      const Vertex before = 20 + 5 * pg.face + (i + 4) % 5;
      const Vertex after = 20 + 5 * pg.face + i;
      EXPECT_TRUE(g.adjacent(pg.boundary[i], before));
      EXPECT_TRUE(g.adjacent(before, after));
      EXPECT_TRUE(g.adjacent(after, pg.boundary[(i + 2) % 5]));
    }
  }
}

TEST(Planarize, LargerInstancesStayValid) {
  for (const auto& p : pentagulations()) {
    const OpDrawing d = insert_pentagrams(p);
    const PlaneMap planar = planarize(d);
    EXPECT_TRUE(validate_map(planar).ok());
    EXPECT_EQ(planar.order(), p.order() + 5 * static_cast<int>(d.pentagrams.size()));
  }
}

}  // namespace
}  // namespace penta2p
