#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "penta2p/graph.hpp"
#include "penta2p/hamiltonicity.hpp"
#include "penta2p/op_drawing.hpp"
#include "penta2p/plane_map.hpp"
#include "penta2p/stellation.hpp"

namespace penta2p {

using Json = nlohmann::ordered_json;

// Graph: {"n": int, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Plane map: {"n", "rotations", optional "outer_face", optional "frame"}
Json to_json(const PlaneMap& m);
PlaneMap map_from_json(const Json& j);

// Stellated map: plane map fields plus "initial" and "stellating".
Json to_json(const StellatedMap& s);

// Op-drawing: {"skeleton": <plane map>, "pentagrams": [{"face", "boundary", "chords"}]}
Json to_json(const OpDrawing& d);
OpDrawing op_drawing_from_json(const Json& j);

Json to_json(const HamWitness& w);
Json to_json(const Certificate& c);

std::string_view to_string(CertificateVerdict v);
std::string_view to_string(WitnessKind k);

/// "n m" followed by one "u v" line per edge, no trailing newline.
std::string to_edgelist(const Graph& g);
Graph graph_from_edgelist(std::string_view text);

std::string to_dot(const Graph& g);
std::string to_dot(const PlaneMap& m);
/// Stellating vertices get a distinct node style.
std::string to_dot(const StellatedMap& s);
/// Skeleton edges solid, pentagram chords dashed and coloured.
std::string to_dot(const OpDrawing& d);

enum class ExportFormat { Dot, Edgelist, Json };

/// Throws UnsupportedFormat for anything other than dot, edgelist, json.
ExportFormat parse_export_format(std::string_view name);

/// Everything the CLI can read from a file: the richest structure present.
struct Document {
  enum class Kind { Graph, PlaneMap, Stellated, OpDrawing } kind = Kind::Graph;
  Graph graph;           // always set: the abstract graph of the document
  PlaneMap map;          // PlaneMap / Stellated: the map; OpDrawing: the skeleton
  OpDrawing drawing;     // OpDrawing only
  int initial_count = 0; // Stellated only
};

/// Detects JSON graph, plane map, stellated map, op-drawing or an edge list.
/// Throws ParseError on malformed input.
Document parse_document(std::string_view text);

}  // namespace penta2p
