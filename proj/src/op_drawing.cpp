#include "penta2p/op_drawing.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "penta2p/error.hpp"

namespace penta2p {

Pentagram Pentagram::from_boundary(int face, const std::array<Vertex, 5>& boundary) {
  Pentagram p;
  p.face = face;
  p.boundary = boundary;
  for (int i = 0; i < 5; ++i) p.chords[i] = {boundary[i], boundary[(i + 2) % 5]};
  return p;
}

OpDrawing insert_pentagrams(const PlaneMap& p) {
  if (!validate_map(p).ok() || !is_pentagulation(p)) {
    throw Error(ErrorCode::NotPentagulation, "op-drawings are built on pentagulations");
  }
  if (vertex_connectivity(p.graph()) < 3) {
    throw Error(ErrorCode::NotThreeConnected, "op-drawings need a 3-connected pentagulation");
  }
  OpDrawing d;
  d.skeleton = p;
  const auto all = p.trace_faces();
  for (std::size_t f = 0; f < all.size(); ++f) {
    const auto& b = all[f].boundary;
    d.pentagrams.push_back(Pentagram::from_boundary(static_cast<int>(f), {b[0], b[1], b[2], b[3], b[4]}));
  }
  return d;
}

std::vector<std::string> validate_op_drawing(const OpDrawing& d) {
  std::vector<std::string> bad;
  auto report = validate_map(d.skeleton);
  if (!report.ok()) return report.violations;
  const auto all = d.skeleton.trace_faces();
  if (d.pentagrams.size() != all.size()) bad.push_back("pentagram count differs from face count");
  std::set<int> used;
  for (const auto& p : d.pentagrams) {
    const std::string tag = "pentagram on face " + std::to_string(p.face);
    if (p.face < 0 || p.face >= static_cast<int>(all.size()) || !used.insert(p.face).second) {
      bad.push_back(tag + ": bad or repeated face id");
      continue;
    }
    if (find_face(std::span<const Face>(&all[p.face], 1), p.boundary) != 0) {
      bad.push_back(tag + ": boundary does not match the face traversal");
    }
    if (p != Pentagram::from_boundary(p.face, p.boundary)) {
      bad.push_back(tag + ": chords do not join boundary vertices two apart");
    }
  }
  return bad;
}

Graph abstract_graph(const OpDrawing& d) {
  const Graph skeleton = d.skeleton.graph();
  std::vector<Edge> edges(skeleton.edges().begin(), skeleton.edges().end());
  std::set<Edge> seen(edges.begin(), edges.end());
  for (const auto& p : d.pentagrams) {
    for (auto [u, v] : p.chords) {
      Edge e = std::minmax(u, v);
      if (!seen.insert(e).second) {
        throw Error(ErrorCode::DuplicateEdge,
                    "chord " + std::to_string(e.first) + "-" + std::to_string(e.second) + " already present");
      }
      edges.push_back(e);
    }
  }
  return Graph::from_edges(d.skeleton.order(), edges);
}

const PlaneMap& planar_skeleton(const OpDrawing& d) { return d.skeleton; }

bool check_optimal_edge_count(const Graph& g) {
  return static_cast<long>(g.size()) == 5L * g.order() - 10;
}

std::map<Edge, int> crossings_per_edge(const OpDrawing& d) {
  std::map<Edge, int> out;
  const Graph g = d.skeleton.graph();
  for (auto e : g.edges()) out[e] = 0;
  for (const auto& p : d.pentagrams) {
    for (int i = 0; i < 5; ++i) {
      auto [a, b] = Pentagram::crossing(i);
      ++out[std::minmax(p.chords[a].first, p.chords[a].second)];
      ++out[std::minmax(p.chords[b].first, p.chords[b].second)];
    }
  }
  return out;
}

PlaneMap planarize(const OpDrawing& d) {
  const int n = d.skeleton.order();
  const int f = static_cast<int>(d.pentagrams.size());
  auto crossing_id = [n](int face, int i) { return n + 5 * face + ((i % 5) + 5) % 5; };
  const auto owner = d.skeleton.dart_faces();

  // Pentagram index by face id.
  std::vector<int> by_face(f, -1);
  for (int k = 0; k < f; ++k) by_face.at(d.pentagrams[k].face) = k;

  std::vector<std::vector<Vertex>> rotations(n + 5 * f);
  for (Vertex v = 0; v < n; ++v) {
    auto rot = d.skeleton.rotation(v);
    for (Vertex from : rot) {
      rotations[v].push_back(from);
      auto back = d.skeleton.rotation(from);
      const int pos = static_cast<int>(std::find(back.begin(), back.end(), v) - back.begin());
      const int k = by_face[owner[from][pos]];
      const auto& b = d.pentagrams[k].boundary;
      const int i = static_cast<int>(std::find(b.begin(), b.end(), v) - b.begin());
      // Inside the face corner at boundary[i], the chord towards
      // boundary[i+3] comes first, then the chord towards boundary[i+2].
      const int face = d.pentagrams[k].face;
      rotations[v].push_back(crossing_id(face, i - 2));
      rotations[v].push_back(crossing_id(face, i - 1));
    }
  }
  for (int k = 0; k < f; ++k) {
    const auto& b = d.pentagrams[k].boundary;
    const int face = d.pentagrams[k].face;
    for (int i = 0; i < 5; ++i) {
      rotations[crossing_id(face, i)] = {crossing_id(face, i - 1), crossing_id(face, i + 1), b[(i + 2) % 5],
                                         b[(i + 1) % 5]};
    }
  }
  return PlaneMap(std::move(rotations));
}

}  // namespace penta2p
