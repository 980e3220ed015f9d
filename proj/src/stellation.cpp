#include "penta2p/stellation.hpp"

#include <algorithm>
#include <set>

#include "penta2p/error.hpp"

namespace penta2p {

StellatedMap stellate(const PlaneMap& m) {
  auto input_faces = faces(m);
  if (!is_biconnected(m.graph())) throw Error(ErrorCode::NotTwoConnected, "stellation needs a 2-connected map");
  auto rotations = m.rotations();
  const int n = m.order();
  for (std::size_t f = 0; f < input_faces.size(); ++f) {
    const auto& cycle = input_faces[f].boundary;
    const std::size_t len = cycle.size();
    const Vertex hub = n + static_cast<Vertex>(f);
    for (std::size_t j = 0; j < len; ++j) {
      Vertex prev = cycle[(j + len - 1) % len];
      auto& row = rotations[cycle[j]];
      row.insert(std::find(row.begin(), row.end(), prev) + 1, hub);
    }
    rotations.emplace_back(cycle.rbegin(), cycle.rend());
  }
  StellatedMap out;
  out.map = PlaneMap(std::move(rotations));
  out.initial_count = n;
  out.host_faces = std::move(input_faces);
  return out;
}

bool stellating_set_independent(const StellatedMap& s) {
  const Graph g = s.map.graph();
  for (auto [u, v] : g.edges()) {
    if (s.is_stellating(u) && s.is_stellating(v)) return false;
  }
  return true;
}

bool check_wheel_property(const StellatedMap& s) {
  const Graph g = s.map.graph();
  for (Vertex x = s.initial_count; x < g.order(); ++x) {
    const auto& rim = s.host_face(x).boundary;
    const std::size_t len = rim.size();
    if (len < 3) return false;
    if (VertexSet(g.neighbors(x).begin(), g.neighbors(x).end()) != make_vertex_set(rim)) return false;
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
        if (g.adjacent(rim[i], rim[j]) != consecutive) return false;
      }
    }
  }
  return true;
}

bool check_consecutive_property(const StellatedMap& s) {
  const Graph g = s.map.graph();
  std::set<std::array<Vertex, 3>> triangles;
  for (const auto& face : s.map.trace_faces()) {
    if (face.length() != 3) continue;
    std::array<Vertex, 3> t{face.boundary[0], face.boundary[1], face.boundary[2]};
    std::sort(t.begin(), t.end());
    triangles.insert(t);
  }
  for (Vertex x = s.initial_count; x < g.order(); ++x) {
    const auto& rim = s.host_face(x).boundary;
    const std::size_t len = rim.size();
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const Vertex y = rim[i];
        const Vertex z = rim[j];
        const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
        if (consecutive) {
          std::array<Vertex, 3> t{x, y, z};
          std::sort(t.begin(), t.end());
          if (!triangles.contains(t)) return false;
        } else if (!g.adjacent(x, y) || !g.adjacent(x, z) || g.adjacent(y, z)) {
          return false;
        }
      }
    }
  }
  return true;
}

FourConnectedVerdict stellation_four_connected(const PlaneMap& m) {
  const Graph g = m.graph();
  if (vertex_connectivity(g) < 3) return {false, FourConnectedReason::NotThreeConnected};
  auto gir = girth(g);
  if (gir && *gir < 4) return {false, FourConnectedReason::GirthTooSmall};
  const StellatedMap s = stellate(m);
  if (!is_triangulation(s.map)) throw Error(ErrorCode::TheoremViolation, "stellation is not a triangulation");
  if (!separating_triangles(s.map).empty()) {
    throw Error(ErrorCode::TheoremViolation, "stellation of a girth >= 4 map has a separating triangle");
  }
  if (vertex_connectivity(s.map.graph()) < 4) {
    throw Error(ErrorCode::TheoremViolation, "stellation of a girth >= 4 map is not 4-connected");
  }
  return {true, FourConnectedReason::Holds};
}

}  // namespace penta2p
