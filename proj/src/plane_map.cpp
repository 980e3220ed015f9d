#include "penta2p/plane_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "penta2p/error.hpp"

namespace penta2p {

namespace {

// Position of each neighbour inside a rotation, for O(log d) twin lookup.
class RotationIndex {
 public:
  explicit RotationIndex(const std::vector<std::vector<Vertex>>& rotations) : sorted_(rotations.size()) {
    for (std::size_t v = 0; v < rotations.size(); ++v) {
      auto& row = sorted_[v];
      for (std::size_t k = 0; k < rotations[v].size(); ++k) row.emplace_back(rotations[v][k], static_cast<int>(k));
      std::sort(row.begin(), row.end());
    }
  }

  int position(Vertex v, Vertex u) const {
    const auto& row = sorted_[v];
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<Vertex, int>{u, -1});
    if (it == row.end() || it->first != u) return -1;
    return it->second;
  }

 private:
  std::vector<std::vector<std::pair<Vertex, int>>> sorted_;
};

struct FaceTrace {
  std::vector<Face> faces;
  std::vector<std::vector<int>> owner;  // owner[v][k]: face of dart v -> rotation[v][k]
  bool broken = false;                  // a dart led to a non-neighbour
};

FaceTrace trace(const std::vector<std::vector<Vertex>>& rotations) {
  FaceTrace out;
  RotationIndex index(rotations);
  const int n = static_cast<int>(rotations.size());
  out.owner.resize(n);
  for (int v = 0; v < n; ++v) out.owner[v].assign(rotations[v].size(), -1);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < rotations[v].size(); ++k) {
      if (out.owner[v][k] >= 0) continue;
      const int id = static_cast<int>(out.faces.size());
      Face face;
      Vertex u = v;
      int pos = static_cast<int>(k);
      while (out.owner[u][pos] < 0) {
        out.owner[u][pos] = id;
        face.boundary.push_back(u);
        Vertex w = rotations[u][pos];
        if (w < 0 || w >= n) {
          out.broken = true;
          break;
        }
        int back = index.position(w, u);
        if (back < 0) {
          out.broken = true;
          break;
        }
        pos = (back + 1) % static_cast<int>(rotations[w].size());
        u = w;
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

}  // namespace

PlaneMap::PlaneMap(std::vector<std::vector<Vertex>> rotations, std::optional<std::vector<Vertex>> outer_face)
    : rotations_(std::move(rotations)), outer_face_(std::move(outer_face)) {}

std::size_t PlaneMap::edge_count() const {
  std::size_t darts = 0;
  for (const auto& row : rotations_) darts += row.size();
  return darts / 2;
}

Vertex PlaneMap::successor(Vertex v, Vertex u) const {
  const auto& row = rotations_[v];
  auto it = std::find(row.begin(), row.end(), u);
  if (it == row.end()) return -1;
  ++it;
  return it == row.end() ? row.front() : *it;
}

Graph PlaneMap::graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex w : rotations_[v]) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(order(), edges);
}

std::vector<Face> PlaneMap::trace_faces() const { return trace(rotations_).faces; }

std::vector<std::vector<int>> PlaneMap::dart_faces() const { return trace(rotations_).owner; }

ValidationReport validate_map(const PlaneMap& m) {
  ValidationReport report;
  auto& bad = report.violations;
  const int n = m.order();
  if (n == 0) {
    bad.push_back("empty map");
    return report;
  }
  bool structural = true;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex w : m.rotation(v)) {
      if (w < 0 || w >= n) {
        bad.push_back("vertex " + std::to_string(v) + " has out-of-range neighbour " + std::to_string(w));
        structural = false;
      } else if (w == v) {
        bad.push_back("self-loop at vertex " + std::to_string(v));
        structural = false;
      } else if (!seen.insert(w).second) {
        bad.push_back("duplicate neighbour " + std::to_string(w) + " at vertex " + std::to_string(v));
        structural = false;
      }
    }
  }
  if (!structural) return report;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : m.rotation(v)) {
      auto back = m.rotation(w);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        bad.push_back("asymmetric adjacency " + std::to_string(v) + "->" + std::to_string(w));
        structural = false;
      }
    }
  }
  if (!structural) return report;

  const Graph g = m.graph();
  if (!is_connected(g)) bad.push_back("disconnected");
  const auto traced = trace(m.rotations());
  report.faces = n == 1 ? 1 : static_cast<int>(traced.faces.size());
  const long euler = static_cast<long>(n) - static_cast<long>(g.size()) + report.faces;
  if (euler != 2) bad.push_back("Euler characteristic " + std::to_string(euler) + " != 2");
  if (is_biconnected(g)) {
    for (std::size_t f = 0; f < traced.faces.size(); ++f) {
      std::set<Vertex> distinct(traced.faces[f].boundary.begin(), traced.faces[f].boundary.end());
      if (distinct.size() != traced.faces[f].length()) {
        bad.push_back("face " + std::to_string(f) + " boundary is not a cycle");
      }
    }
  }
  if (m.outer_face() && find_face(traced.faces, *m.outer_face()) < 0) {
    bad.push_back("outer face key does not match any face");
  }
  for (Vertex v : m.frame()) {
    if (v < 0 || v >= n) bad.push_back("frame vertex " + std::to_string(v) + " out of range");
  }
  return report;
}

std::vector<Face> faces(const PlaneMap& m) {
  auto report = validate_map(m);
  if (!report.ok()) throw Error(ErrorCode::InvalidMap, report.violations.front());
  return m.trace_faces();
}

int find_face(std::span<const Face> faces, std::span<const Vertex> key) {
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& b = faces[f].boundary;
    if (b.size() != key.size() || b.empty()) continue;
    auto start = std::find(b.begin(), b.end(), key.front());
    if (start == b.end()) continue;
    const std::size_t offset = static_cast<std::size_t>(start - b.begin());
    bool match = true;
    for (std::size_t i = 0; i < key.size() && match; ++i) match = b[(offset + i) % b.size()] == key[i];
    if (match) return static_cast<int>(f);
  }
  return -1;
}

int outer_face_index(const PlaneMap& m) {
  if (!m.outer_face()) return -1;
  return find_face(m.trace_faces(), *m.outer_face());
}

namespace {

bool all_faces_are_cycles_of(const PlaneMap& m, std::size_t length) {
  for (const auto& face : faces(m)) {
    if (face.length() != length) return false;
    std::set<Vertex> distinct(face.boundary.begin(), face.boundary.end());
    if (distinct.size() != length) return false;
  }
  return true;
}

}  // namespace

bool is_pentagulation(const PlaneMap& m) { return all_faces_are_cycles_of(m, 5); }

bool is_triangulation(const PlaneMap& m) { return all_faces_are_cycles_of(m, 3); }

std::vector<std::array<Vertex, 3>> separating_triangles(const PlaneMap& m) {
  const auto all = faces(m);
  const Graph g = m.graph();
  if (!is_biconnected(g)) throw Error(ErrorCode::InvalidMap, "separating_triangles needs a 2-connected map");
  std::set<std::array<Vertex, 3>> facial;
  for (const auto& face : all) {
    if (face.length() != 3) continue;
    std::array<Vertex, 3> t{face.boundary[0], face.boundary[1], face.boundary[2]};
    std::sort(t.begin(), t.end());
    facial.insert(t);
  }
  std::vector<std::array<Vertex, 3>> out;
  for (auto [u, v] : g.edges()) {
    for (Vertex w : g.neighbors(u)) {
      if (w <= v || !g.adjacent(v, w)) continue;
      std::array<Vertex, 3> t{u, v, w};
      if (!facial.contains(t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool face_chords_absent(const PlaneMap& m) {
  const auto all = faces(m);
  const Graph g = m.graph();
  if (vertex_connectivity(g) < 3) throw Error(ErrorCode::NotThreeConnected, "chord check needs a 3-connected map");
  for (const auto& face : all) {
    const auto& b = face.boundary;
    const std::size_t len = b.size();
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (g.adjacent(b[i], b[j])) return false;
      }
    }
  }
  return true;
}

PlaneMap embed_straight_line(std::span<const std::array<double, 2>> coords, std::span<const Edge> edges) {
  const int n = static_cast<int>(coords.size());
  const Graph g = Graph::from_edges(n, edges);
  std::vector<std::vector<Vertex>> rotations(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::vector<std::pair<double, Vertex>> by_angle;
    for (Vertex w : nb) {
      by_angle.emplace_back(std::atan2(coords[w][1] - coords[v][1], coords[w][0] - coords[v][0]), w);
    }
    // Decreasing angle is clockwise.
    std::sort(by_angle.begin(), by_angle.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [angle, w] : by_angle) rotations[v].push_back(w);
  }
  return PlaneMap(std::move(rotations));
}

}  // namespace penta2p
