#include "penta2p/io.hpp"

#include <functional>
#include <sstream>

#include "penta2p/error.hpp"

namespace penta2p {

namespace {

Json edges_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["edges"] = edges_json(g.edges());
  return j;
}

Graph graph_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  std::vector<Edge> edges;
  for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2) throw Error(ErrorCode::ParseError, "edge entries must have two ids");
    edges.emplace_back(e[0], e[1]);
  }
  return Graph::from_edges(n, edges);
}

Json to_json(const PlaneMap& m) {
  Json j;
  j["n"] = m.order();
  j["rotations"] = m.rotations();
  if (m.outer_face()) j["outer_face"] = *m.outer_face();
  if (!m.frame().empty()) j["frame"] = m.frame();
  return j;
}

PlaneMap map_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  auto rotations = field<std::vector<std::vector<Vertex>>>(j, "rotations");
  if (static_cast<int>(rotations.size()) != n) throw Error(ErrorCode::ParseError, "rotation count differs from n");
  std::optional<std::vector<Vertex>> outer;
  if (j.contains("outer_face")) outer = field<std::vector<Vertex>>(j, "outer_face");
  PlaneMap m(std::move(rotations), std::move(outer));
  if (j.contains("frame")) m.set_frame(field<std::vector<Vertex>>(j, "frame"));
  return m;
}

Json to_json(const StellatedMap& s) {
  Json j = to_json(s.map);
  std::vector<Vertex> initial, stellating;
  for (Vertex v = 0; v < s.map.order(); ++v) (s.is_stellating(v) ? stellating : initial).push_back(v);
  j["initial"] = initial;
  j["stellating"] = stellating;
  return j;
}

Json to_json(const OpDrawing& d) {
  Json j;
  j["skeleton"] = to_json(d.skeleton);
  Json list = Json::array();
  for (const auto& p : d.pentagrams) {
    Json item;
    item["face"] = p.face;
    item["boundary"] = p.boundary;
    item["chords"] = edges_json(p.chords);
    list.push_back(std::move(item));
  }
  j["pentagrams"] = std::move(list);
  return j;
}

OpDrawing op_drawing_from_json(const Json& j) {
  if (!j.contains("skeleton")) throw Error(ErrorCode::ParseError, "missing field \"skeleton\"");
  OpDrawing d;
  d.skeleton = map_from_json(j.at("skeleton"));
  if (!j.contains("pentagrams") || !j.at("pentagrams").is_array()) {
    throw Error(ErrorCode::ParseError, "missing array \"pentagrams\"");
  }
  for (const auto& item : j.at("pentagrams")) {
    Pentagram p;
    p.face = field<int>(item, "face");
    p.boundary = field<std::array<Vertex, 5>>(item, "boundary");
    auto chords = field<std::vector<std::vector<Vertex>>>(item, "chords");
    if (chords.size() != 5) throw Error(ErrorCode::ParseError, "a pentagram has five chords");
    for (int i = 0; i < 5; ++i) {
      if (chords[i].size() != 2) throw Error(ErrorCode::ParseError, "chord entries must have two ids");
      p.chords[i] = {chords[i][0], chords[i][1]};
    }
    d.pentagrams.push_back(p);
  }
  auto bad = validate_op_drawing(d);
  if (!bad.empty()) throw Error(ErrorCode::ParseError, "invalid op-drawing: " + bad.front());
  return d;
}

std::string_view to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::NonHamiltonian: return "NonHamiltonian";
    case CertificateVerdict::NoPerfectMatchingBound: return "NoPerfectMatchingBound";
    case CertificateVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(WitnessKind k) { return k == WitnessKind::Cycle ? "cycle" : "path"; }

Json to_json(const HamWitness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["vertices"] = w.vertices;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["cut"] = c.cut;
  j["component_count"] = c.component_count;
  j["odd_component_count"] = c.odd_component_count;
  j["verdict"] = to_string(c.verdict);
  return j;
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size();
  for (auto [u, v] : g.edges()) out << '\n' << u << ' ' << v;
  return out.str();
}

Graph graph_from_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::ParseError, "edge list must start with \"n m\"");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::ParseError, "edge list ended after " + std::to_string(i) + " edges");
    edges.emplace_back(u, v);
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::ParseError, "trailing data after edge list");
  return Graph::from_edges(static_cast<int>(n), edges);
}

namespace {

void dot_nodes(std::ostringstream& out, int n, const std::function<std::string(Vertex)>& style) {
  for (Vertex v = 0; v < n; ++v) {
    out << "  " << v;
    if (auto s = style(v); !s.empty()) out << " [" << s << "]";
    out << ";\n";
  }
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  dot_nodes(out, g.order(), [](Vertex) { return std::string(); });
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const PlaneMap& m) { return to_dot(m.graph()); }

std::string to_dot(const StellatedMap& s) {
  std::ostringstream out;
  out << "graph G {\n";
  dot_nodes(out, s.map.order(), [&](Vertex v) {
    return s.is_stellating(v) ? std::string("shape=point, color=red") : std::string();
  });
  const Graph g = s.map.graph();
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (s.is_stellating(u) || s.is_stellating(v)) out << " [style=dotted]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const OpDrawing& d) {
  std::ostringstream out;
  out << "graph G {\n";
  dot_nodes(out, d.skeleton.order(), [](Vertex) { return std::string(); });
  const Graph g = d.skeleton.graph();
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  for (const auto& p : d.pentagrams) {
    for (auto [u, v] : p.chords) {
      out << "  " << std::min(u, v) << " -- " << std::max(u, v) << " [style=dashed, color=blue];\n";
    }
  }
  out << "}\n";
  return out.str();
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "edgelist") return ExportFormat::Edgelist;
  if (name == "json") return ExportFormat::Json;
  throw Error(ErrorCode::UnsupportedFormat, "unknown export format \"" + std::string(name) + "\"");
}

Document parse_document(std::string_view text) {
  Document doc;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorCode::ParseError, "empty input");
  if (text[first] != '{') {
    doc.kind = Document::Kind::Graph;
    doc.graph = graph_from_edgelist(text);
    return doc;
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (j.contains("skeleton")) {
    doc.kind = Document::Kind::OpDrawing;
    doc.drawing = op_drawing_from_json(j);
    doc.map = doc.drawing.skeleton;
    doc.graph = abstract_graph(doc.drawing);
  } else if (j.contains("rotations")) {
    doc.map = map_from_json(j);
    doc.graph = doc.map.graph();
    doc.kind = Document::Kind::PlaneMap;
    if (j.contains("stellating")) {
      doc.kind = Document::Kind::Stellated;
      doc.initial_count = static_cast<int>(field<std::vector<Vertex>>(j, "initial").size());
    }
  } else if (j.contains("edges")) {
    doc.kind = Document::Kind::Graph;
    doc.graph = graph_from_json(j);
  } else {
    throw Error(ErrorCode::ParseError, "unrecognised JSON document");
  }
  return doc;
}

}  // namespace penta2p
