#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "penta2p/graph.hpp"
#include "penta2p/op_drawing.hpp"
#include "penta2p/stellation.hpp"

namespace penta2p {

enum class WitnessKind { Path, Cycle };

struct HamWitness {
  std::vector<Vertex> vertices;
  WitnessKind kind = WitnessKind::Path;

  friend bool operator==(const HamWitness&, const HamWitness&) = default;
};

/// Distinct vertices covering g, consecutive pairs adjacent, and for a
/// cycle the closing edge too.
bool verify_witness(const Graph& g, const HamWitness& w);

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

struct SearchOptions {
  /// Search nodes allowed per query; running out throws Indeterminate.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Workers for all-pairs queries. Results do not depend on it.
  unsigned threads = 1;
};

/// Reads PENTA2P_BUDGET if set, otherwise kDefaultNodeBudget.
std::uint64_t default_node_budget();

/// Exact backtracking search. nullopt means no Hamiltonian cycle exists.
/// Throws TooSmall for n < 3 and Indeterminate when the budget runs out.
std::optional<HamWitness> hamiltonian_cycle(const Graph& g, const SearchOptions& opts = {});

/// Exact s-t Hamiltonian path search. Throws SameEndpoints, OutOfRange,
/// Indeterminate.
std::optional<HamWitness> hamiltonian_path(const Graph& g, Vertex s, Vertex t, const SearchOptions& opts = {});

struct HamiltonianConnectivity {
  bool verdict = false;
  std::map<Edge, HamWitness> witnesses;
  std::optional<Edge> failing_pair;  // smallest failing pair
};

HamiltonianConnectivity is_hamiltonian_connected(const Graph& g, const SearchOptions& opts = {});

/// Contracts every a, h, b on the path with h stellating to the edge ab of g.
HamWitness lift_path(const HamWitness& w, const StellatedMap& s, const Graph& g);

/// Stellates the skeleton of an op-drawing once and answers path queries
/// between skeleton vertices: search in the stellation, then lift into the
/// abstract graph.
class Theorem1Pipeline {
 public:
  /// Throws GirthTooSmall when the skeleton has a triangle and
  /// TheoremViolation when the stellation is not 4-connected.
  explicit Theorem1Pipeline(const OpDrawing& d, SearchOptions opts = {});

  /// Throws SameEndpoints, OutOfRange, SearchExhausted.
  HamWitness path(Vertex x, Vertex y) const;

  const Graph& graph() const { return graph_; }
  const StellatedMap& stellation() const { return stellated_; }

 private:
  Graph graph_;
  StellatedMap stellated_;
  Graph stellated_graph_;
  SearchOptions opts_;
};

HamWitness theorem1_pipeline(const OpDrawing& d, Vertex x, Vertex y, const SearchOptions& opts = {});

enum class CertificateVerdict { NonHamiltonian, NoPerfectMatchingBound, Inconclusive };

struct Certificate {
  VertexSet cut;
  int component_count = 0;
  int odd_component_count = 0;
  CertificateVerdict verdict = CertificateVerdict::Inconclusive;

  /// odd(g - cut) - |cut|: lower bound on the number of vertices every
  /// matching leaves uncovered.
  int deficiency() const { return odd_component_count - static_cast<int>(cut.size()); }
  bool excludes_perfect_matching() const { return deficiency() > 0; }
};

/// Counts the components of g - s. More components than |s| rules out a
/// Hamiltonian cycle; otherwise more odd components than |s| rules out a
/// perfect matching. Throws BadCut for an empty, full or out-of-range cut.
Certificate non_hamiltonian_certificate(const Graph& g, const VertexSet& s);

/// Every other edge of a witness: perfect for even order, near-perfect for odd.
std::vector<Edge> matching_from_hamiltonian(const HamWitness& w);

}  // namespace penta2p
