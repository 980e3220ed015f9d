#include "penta2p/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "penta2p/error.hpp"
#include "penta2p/generators.hpp"
#include "penta2p/graph.hpp"
#include "penta2p/hamiltonicity.hpp"
#include "penta2p/io.hpp"
#include "penta2p/op_drawing.hpp"
#include "penta2p/stellation.hpp"

namespace penta2p {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  unsigned threads = 1;
  std::string in_path;
  std::string out_path;
};

std::string read_input(const Context& ctx) {
  std::ostringstream buffer;
  if (ctx.in_path.empty() || ctx.in_path == "-") {
    buffer << ctx.in.rdbuf();
  } else {
    std::ifstream file(ctx.in_path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open " + ctx.in_path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(const Context& ctx, const std::string& text) {
  if (ctx.out_path.empty() || ctx.out_path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream file(ctx.out_path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + ctx.out_path);
  file << text;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

// Prints a verdict either as one JSON record or as "key: value" lines.
int report(const Context& ctx, const Json& record, bool verdict) {
  if (ctx.json) {
    ctx.out << dump(record);
  } else {
    for (const auto& [key, value] : record.items()) {
      ctx.out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return verdict ? kExitTrue : kExitFalse;
}

const OpDrawing& require_drawing(const Document& doc) {
  if (doc.kind != Document::Kind::OpDrawing) throw Error(ErrorCode::ParseError, "this command needs an op-drawing");
  return doc.drawing;
}

const PlaneMap& require_map(const Document& doc) {
  if (doc.kind == Document::Kind::Graph) throw Error(ErrorCode::ParseError, "this command needs a plane map");
  return doc.map;
}

SearchOptions search_options(const Context& ctx, std::uint64_t budget) {
  SearchOptions opts;
  opts.node_budget = budget > 0 ? budget : default_node_budget();
  opts.threads = ctx.threads;
  return opts;
}

int cmd_gen(const Context& ctx, const std::string& kind, int s, int l, const std::string& gadget) {
  PlaneMap m;
  if (kind == "dodecahedron") {
    m = dodecahedron();
  } else if (kind == "prism") {
    m = prism(s);
  } else if (kind == "stacked") {
    m = stacked_triangulation(l);
  } else if (kind == "gadget-h") {
    m = gadget_h().map;
  } else if (kind == "gadget-f") {
    m = gadget_f().map;
  } else if (kind == "thm2") {
    if (gadget != "h" && gadget != "f") throw CLI::ValidationError("--gadget", "must be h or f");
    m = theorem2_pentagulation(l, gadget == "h" ? gadget_h() : gadget_f());
  } else {
    throw CLI::ValidationError("gen", "unknown generator " + kind);
  }
  write_output(ctx, dump(to_json(m)));
  return kExitTrue;
}

int cmd_check(const Context& ctx, const std::string& what) {
  const Document doc = parse_document(read_input(ctx));
  Json rec;
  rec["check"] = what;
  bool verdict = false;
  if (what == "optimal") {
    verdict = check_optimal_edge_count(doc.graph);
    rec["n"] = doc.graph.order();
    rec["m"] = doc.graph.size();
    rec["target"] = 5L * doc.graph.order() - 10;
  } else if (what == "crossings") {
    const auto counts = crossings_per_edge(require_drawing(doc));
    const Graph skeleton = doc.drawing.skeleton.graph();
    int max_count = 0;
    verdict = true;
    for (const auto& [edge, count] : counts) {
      max_count = std::max(max_count, count);
      const bool chord = !skeleton.adjacent(edge.first, edge.second);
      if (count != (chord ? 2 : 0)) verdict = false;
    }
    rec["edges"] = counts.size();
    rec["max_crossings"] = max_count;
  } else if (what == "skeleton") {
    const auto& d = require_drawing(doc);
    const PlaneMap& p = planar_skeleton(d);
    verdict = validate_op_drawing(d).empty() && is_pentagulation(p) && vertex_connectivity(p.graph()) >= 3 &&
              insert_pentagrams(p) == d;
    rec["n"] = p.order();
    rec["skeleton_edges"] = p.edge_count();
  } else if (what == "pentagulation") {
    const auto& m = require_map(doc);
    verdict = validate_map(m).ok() && is_pentagulation(m);
  } else if (what == "triangulation") {
    const auto& m = require_map(doc);
    verdict = validate_map(m).ok() && is_triangulation(m);
  } else if (what == "valid") {
    const auto r = validate_map(require_map(doc));
    verdict = r.ok();
    rec["faces"] = r.faces;
    rec["violations"] = r.violations;
  } else if (what == "chords") {
    verdict = face_chords_absent(require_map(doc));
  } else if (what == "four-connected") {
    const auto v = stellation_four_connected(require_map(doc));
    verdict = v.verdict;
    rec["reason"] = v.reason == FourConnectedReason::Holds             ? "Holds"
                    : v.reason == FourConnectedReason::GirthTooSmall ? "GirthTooSmall"
                                                                       : "NotThreeConnected";
  } else if (what == "stellation") {
    const StellatedMap s = stellate(require_map(doc));
    const bool independent = stellating_set_independent(s);
    const bool wheel = check_wheel_property(s);
    const bool consecutive = check_consecutive_property(s);
    verdict = independent && wheel && consecutive && is_triangulation(s.map);
    rec["independent"] = independent;
    rec["wheel"] = wheel;
    rec["consecutive"] = consecutive;
  } else {
    throw CLI::ValidationError("check", "unknown check " + what);
  }
  rec["verdict"] = verdict;
  return report(ctx, rec, verdict);
}

int cmd_ham(const Context& ctx, const std::string& mode, int from, int to, std::uint64_t budget) {
  const Document doc = parse_document(read_input(ctx));
  const auto opts = search_options(ctx, budget);
  Json rec;
  rec["mode"] = mode;
  if (mode == "cycle" || mode == "path") {
    std::optional<HamWitness> w;
    if (mode == "cycle") {
      w = hamiltonian_cycle(doc.graph, opts);
    } else {
      if (from < 0 || to < 0) throw CLI::ValidationError("ham path", "--from and --to are required");
      w = hamiltonian_path(doc.graph, from, to, opts);
    }
    rec["found"] = w.has_value();
    if (w) rec["witness"] = to_json(*w);
    if (ctx.json || !w) return report(ctx, rec, w.has_value());
    for (std::size_t i = 0; i < w->vertices.size(); ++i) ctx.out << (i ? " " : "") << w->vertices[i];
    ctx.out << "\n";
    return kExitTrue;
  }
  if (mode == "connected") {
    const auto result = is_hamiltonian_connected(doc.graph, opts);
    rec["verdict"] = result.verdict;
    rec["pairs_checked"] = result.witnesses.size() + (result.verdict ? 0 : 1);
    if (result.failing_pair) rec["failing_pair"] = {result.failing_pair->first, result.failing_pair->second};
    return report(ctx, rec, result.verdict);
  }
  throw CLI::ValidationError("ham", "mode must be cycle, path or connected");
}

int cmd_pipeline(const Context& ctx, int from, int to, bool all_pairs, std::uint64_t budget) {
  const Document doc = parse_document(read_input(ctx));
  const Theorem1Pipeline pipeline(require_drawing(doc), search_options(ctx, budget));
  if (!all_pairs) {
    if (from < 0 || to < 0) throw CLI::ValidationError("pipeline", "--from and --to are required");
    const HamWitness w = pipeline.path(from, to);
    if (ctx.json) {
      ctx.out << dump(to_json(w));
    } else {
      for (std::size_t i = 0; i < w.vertices.size(); ++i) ctx.out << (i ? " " : "") << w.vertices[i];
      ctx.out << "\n";
    }
    return kExitTrue;
  }
  const int n = pipeline.graph().order();
  int verified = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (verify_witness(pipeline.graph(), pipeline.path(x, y))) ++verified;
    }
  }
  Json rec;
  rec["pairs"] = n * (n - 1) / 2;
  rec["verified"] = verified;
  return report(ctx, rec, verified == n * (n - 1) / 2);
}

VertexSet parse_cut(const std::string& text, const Document& doc) {
  if (text == "auto-corners") {
    if (doc.kind == Document::Kind::Graph || doc.map.frame().empty()) {
      throw Error(ErrorCode::BadCut, "auto-corners needs a construction that records its frame vertices");
    }
    return doc.map.frame();
  }
  std::vector<Vertex> ids;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadCut, "cannot parse cut entry \"" + token + "\"");
    }
  }
  return make_vertex_set(std::move(ids));
}

int cmd_certify(const Context& ctx, const std::string& cut_text) {
  const Document doc = parse_document(read_input(ctx));
  const Certificate cert = non_hamiltonian_certificate(doc.graph, parse_cut(cut_text, doc));
  const MatchingBound bound = matching_upper_bound(doc.graph, cert.cut);
  Json rec = to_json(cert);
  rec["n"] = doc.graph.order();
  rec["matching_bound"] = bound.bound;
  rec["deficiency"] = cert.deficiency();
  return report(ctx, rec, cert.verdict != CertificateVerdict::Inconclusive);
}

int cmd_bound(const Context& ctx, int k) {
  const auto b = connectivity_upper_bound(k);
  Json rec;
  rec["k"] = k;
  rec["edge_coeff"] = b.edge_coeff;
  rec["kappa_bound"] = b.kappa_bound;
  if (ctx.json) {
    ctx.out << dump(rec);
  } else {
    ctx.out << "k: " << k << "\nedge_coeff: " << std::fixed << std::setprecision(3) << b.edge_coeff
            << "\nkappa_bound: " << b.kappa_bound << "\n";
  }
  return kExitTrue;
}

int cmd_export(const Context& ctx, const std::string& format_name) {
  const ExportFormat format = parse_export_format(format_name);
  const Document doc = parse_document(read_input(ctx));
  std::string text;
  StellatedMap stellated;
  if (doc.kind == Document::Kind::Stellated) {
    stellated.map = doc.map;
    stellated.initial_count = doc.initial_count;
  }
  switch (format) {
    case ExportFormat::Edgelist:
      text = to_edgelist(doc.graph) + "\n";
      break;
    case ExportFormat::Dot:
      switch (doc.kind) {
        case Document::Kind::Graph: text = to_dot(doc.graph); break;
        case Document::Kind::PlaneMap: text = to_dot(doc.map); break;
        case Document::Kind::Stellated: text = to_dot(stellated); break;
        case Document::Kind::OpDrawing: text = to_dot(doc.drawing); break;
      }
      break;
    case ExportFormat::Json:
      switch (doc.kind) {
        case Document::Kind::Graph: text = dump(to_json(doc.graph)); break;
        case Document::Kind::PlaneMap: text = dump(to_json(doc.map)); break;
        case Document::Kind::Stellated: text = dump(to_json(stellated)); break;
        case Document::Kind::OpDrawing: text = dump(to_json(doc.drawing)); break;
      }
      break;
  }
  write_output(ctx, text);
  return kExitTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal 2-planar graphs: constructions, structural checks and Hamiltonicity"};
  app.name("penta2p");
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{in, out, err, false, 1, {}, {}};
  ctx.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", ctx.json, "Machine-readable JSON on standard output");
  app.add_option("--threads", ctx.threads, "Worker threads for all-pairs searches")->check(CLI::PositiveNumber);

  std::string kind, what, mode, cut, format = "json";
  int s = 5, l = 5, k = 1, from = -1, to = -1;
  std::string gadget = "h";
  std::uint64_t budget = 0;
  bool all_pairs = false;

  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", ctx.in_path, "Input file (default: standard input)"); };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", ctx.out_path, "Output file (default: standard output)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Search node budget (default: PENTA2P_BUDGET or built-in)");
  };

  auto* gen = app.add_subcommand("gen", "Generate a plane map");
  gen->add_option("kind", kind, "dodecahedron|prism|stacked|gadget-h|gadget-f|thm2")->required();
  gen->add_option("--s", s, "Prism cycle length");
  gen->add_option("--l", l, "Base triangulation order");
  gen->add_option("--gadget", gadget, "Gadget for thm2: h or f");
  add_out(gen);

  auto* op = app.add_subcommand("op", "Insert a pentagram into every face of a pentagulation");
  add_in(op);
  add_out(op);

  auto* stel = app.add_subcommand("stellate", "Face-stellation of a plane map");
  add_in(stel);
  add_out(stel);

  auto* check = app.add_subcommand("check", "Structural checks");
  check->add_option("what", what,
                    "optimal|crossings|skeleton|pentagulation|triangulation|valid|chords|four-connected|stellation")
      ->required();
  add_in(check);

  auto* ham = app.add_subcommand("ham", "Exact Hamiltonian searches");
  ham->add_option("mode", mode, "cycle|path|connected")->required();
  ham->add_option("--from", from, "Path start");
  ham->add_option("--to", to, "Path end");
  add_in(ham);
  add_budget(ham);

  auto* pipe = app.add_subcommand("pipeline", "Hamiltonian path through the stellated skeleton, lifted back");
  pipe->add_option("--from", from, "Path start");
  pipe->add_option("--to", to, "Path end");
  pipe->add_flag("--all-pairs", all_pairs, "Run every vertex pair and verify each lifted path");
  add_in(pipe);
  add_budget(pipe);

  auto* certify = app.add_subcommand("certify", "Component-count certificate for a vertex cut");
  certify->add_option("--cut", cut, "Comma-separated ids or auto-corners")->required();
  add_in(certify);

  auto* bound = app.add_subcommand("bound", "Connectivity ceiling for k-planar graphs");
  bound->add_option("--k", k, "Crossings allowed per edge")->required();

  auto* exp = app.add_subcommand("export", "Serialize as dot, edgelist or json");
  exp->add_option("--format", format, "dot|edgelist|json");
  add_in(exp);
  add_out(exp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "penta2p: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(ctx, kind, s, l, gadget);
    if (*op) {
      const Document doc = parse_document(read_input(ctx));
      write_output(ctx, dump(to_json(insert_pentagrams(require_map(doc)))));
      return kExitTrue;
    }
    if (*stel) {
      const Document doc = parse_document(read_input(ctx));
      write_output(ctx, dump(to_json(stellate(require_map(doc)))));
      return kExitTrue;
    }
    if (*check) return cmd_check(ctx, what);
    if (*ham) return cmd_ham(ctx, mode, from, to, budget);
    if (*pipe) return cmd_pipeline(ctx, from, to, all_pairs, budget);
    if (*certify) return cmd_certify(ctx, cut);
    if (*bound) return cmd_bound(ctx, k);
    if (*exp) return cmd_export(ctx, format);
  } catch (const Error& e) {
    err << "penta2p: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "penta2p: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace penta2p
