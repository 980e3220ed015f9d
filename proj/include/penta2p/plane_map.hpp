#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "penta2p/graph.hpp"

namespace penta2p {

/// Closed boundary walk of one face, in traversal order.
struct Face {
  std::vector<Vertex> boundary;

  std::size_t length() const { return boundary.size(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  int faces = 0;

  bool ok() const { return violations.empty(); }
};

/**
   Combinatorial sphere embedding given by a rotation system.

   `rotation(v)` lists the neighbours of v in clockwise order. Faces are the
   orbits of the dart map (u -> v) |-> (v -> w), where w is the successor of
   u in the rotation of v. With clockwise rotations every face is traversed
   with the face on its left.

   The optional outer face is stored as a boundary key (any cyclic shift of
   a traced face boundary). The optional frame is a vertex set carried as
   metadata by constructions that plant gadgets into a base triangulation.
 */
class PlaneMap {
 public:
  PlaneMap() = default;
  explicit PlaneMap(std::vector<std::vector<Vertex>> rotations,
                    std::optional<std::vector<Vertex>> outer_face = std::nullopt);

  int order() const { return static_cast<int>(rotations_.size()); }
  std::size_t edge_count() const;

  std::span<const Vertex> rotation(Vertex v) const& { return rotations_[v]; }
  std::span<const Vertex> rotation(Vertex v) const&& = delete;
  const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }

  /// Neighbour following u in the rotation of v, or -1 if u is not a neighbour.
  Vertex successor(Vertex v, Vertex u) const;

  const std::optional<std::vector<Vertex>>& outer_face() const { return outer_face_; }
  void set_outer_face(std::optional<std::vector<Vertex>> key) { outer_face_ = std::move(key); }

  const VertexSet& frame() const { return frame_; }
  void set_frame(VertexSet frame) { frame_ = make_vertex_set(std::move(frame)); }

  /// Underlying simple graph. Throws OutOfRange / LoopEdge on malformed rotations.
  Graph graph() const;

  /// Face orbits without any validation; faces are numbered by their first
  /// dart, scanning vertices in id order and each rotation in stored order.
  std::vector<Face> trace_faces() const;

  /// Face index owning the dart (u -> v), for the same numbering as trace_faces().
  std::vector<std::vector<int>> dart_faces() const;

  friend bool operator==(const PlaneMap&, const PlaneMap&) = default;

 private:
  std::vector<std::vector<Vertex>> rotations_;
  std::optional<std::vector<Vertex>> outer_face_;
  VertexSet frame_;
};

ValidationReport validate_map(const PlaneMap& m);

/// Face orbits of a valid map. Throws InvalidMap otherwise.
std::vector<Face> faces(const PlaneMap& m);

/// Index of the face matching `key` up to cyclic shift, or -1.
int find_face(std::span<const Face> faces, std::span<const Vertex> key);

/// Index of the designated outer face, or -1 when none is set.
int outer_face_index(const PlaneMap& m);

bool is_pentagulation(const PlaneMap& m);
bool is_triangulation(const PlaneMap& m);

/// Non-facial 3-cycles. In a simple plane graph these are exactly the
/// separating triangles. Requires a valid 2-connected map.
std::vector<std::array<Vertex, 3>> separating_triangles(const PlaneMap& m);

/// true iff no face boundary has a chord. Throws NotThreeConnected when
/// kappa < 3.
bool face_chords_absent(const PlaneMap& m);

/// Rotation system of a straight-line drawing: neighbours of each vertex
/// sorted clockwise by angle. Planarity of the drawing is the caller's
/// responsibility; validate_map catches crossing drawings via Euler.
PlaneMap embed_straight_line(std::span<const std::array<double, 2>> coords, std::span<const Edge> edges);

}  // namespace penta2p
