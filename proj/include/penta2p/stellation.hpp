#pragma once

#include "penta2p/plane_map.hpp"

namespace penta2p {

/// Face-stellation of a plane map. Ids below `initial_count` are the
/// original vertices; vertex initial_count + f was inserted into face f.
struct StellatedMap {
  PlaneMap map;
  int initial_count = 0;
  std::vector<Face> host_faces;  // host_faces[f] is the boundary of face f of the input

  bool is_stellating(Vertex v) const { return v >= initial_count; }
  int stellating_count() const { return map.order() - initial_count; }
  const Face& host_face(Vertex stellating) const { return host_faces[stellating - initial_count]; }
};

/// Inserts one vertex into every face, joined to the whole boundary.
/// Throws InvalidMap or NotTwoConnected.
StellatedMap stellate(const PlaneMap& m);

/// No two stellating vertices are adjacent.
bool stellating_set_independent(const StellatedMap& s);

/// Each stellating vertex x together with N(x) induces a wheel whose rim is
/// the host face cycle. Works on the current adjacency of s.map, so a
/// mutated map is judged as given.
bool check_wheel_property(const StellatedMap& s);

/// For each stellating x on host cycle C: consecutive y, z on C bound a
/// triangular face xyz, non-consecutive y, z induce the path y-x-z.
bool check_consecutive_property(const StellatedMap& s);

enum class FourConnectedReason { Holds, NotThreeConnected, GirthTooSmall };

struct FourConnectedVerdict {
  bool verdict = false;
  FourConnectedReason reason = FourConnectedReason::Holds;
};

/// If kappa(m) >= 3 and girth(m) >= 4, stellates and confirms the result is
/// a triangulation without separating triangles and with kappa >= 4; any
/// failure there throws TheoremViolation. Otherwise reports the unmet
/// hypothesis.
FourConnectedVerdict stellation_four_connected(const PlaneMap& m);

}  // namespace penta2p
