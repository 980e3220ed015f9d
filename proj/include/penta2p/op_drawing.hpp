#pragma once

#include <array>
#include <map>

#include "penta2p/graph.hpp"
#include "penta2p/plane_map.hpp"

namespace penta2p {

/// Five mutually crossing chords drawn inside one pentagonal face.
///
/// `boundary` follows the face traversal. Chord i joins boundary[i] and
/// boundary[i+2] and crosses exactly chords i-1 and i+1 (mod 5); crossing
/// pair i is {chord i, chord i+1}.
struct Pentagram {
  int face = -1;
  std::array<Vertex, 5> boundary{};
  std::array<Edge, 5> chords{};

  static Pentagram from_boundary(int face, const std::array<Vertex, 5>& boundary);

  static constexpr std::pair<int, int> crossing(int i) { return {i, (i + 1) % 5}; }

  friend bool operator==(const Pentagram&, const Pentagram&) = default;
};

/// Pentagulation with a pentagram in every face.
struct OpDrawing {
  PlaneMap skeleton;
  std::vector<Pentagram> pentagrams;

  friend bool operator==(const OpDrawing&, const OpDrawing&) = default;
};

/// Throws NotPentagulation (including invalid maps) or NotThreeConnected.
OpDrawing insert_pentagrams(const PlaneMap& p);

/// Violations of the drawing invariants against its skeleton; empty when valid.
std::vector<std::string> validate_op_drawing(const OpDrawing& d);

/// Skeleton edges plus every chord. Throws DuplicateEdge when a chord
/// repeats a skeleton edge or another chord.
Graph abstract_graph(const OpDrawing& d);

const PlaneMap& planar_skeleton(const OpDrawing& d);

/// m == 5n - 10.
bool check_optimal_edge_count(const Graph& g);

/// Crossings per edge of the drawing: 0 on skeleton edges, 2 on chords.
std::map<Edge, int> crossings_per_edge(const OpDrawing& d);

/// Replaces every crossing by a degree-4 vertex. The crossing of chords i
/// and i+1 in pentagram f gets id n + 5f + i; chord i then runs
/// boundary[i], X(i-1), X(i), boundary[i+2].
PlaneMap planarize(const OpDrawing& d);

}  // namespace penta2p
