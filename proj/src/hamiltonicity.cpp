#include "penta2p/hamiltonicity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "penta2p/error.hpp"

namespace penta2p {

bool verify_witness(const Graph& g, const HamWitness& w) {
  const auto& vs = w.vertices;
  if (static_cast<int>(vs.size()) != g.order() || vs.empty()) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : vs) {
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  if (w.kind == WitnessKind::Cycle) return vs.size() >= 3 && g.adjacent(vs.back(), vs.front());
  return true;
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("PENTA2P_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultNodeBudget;
}

namespace {

/**
   Depth-first extension of a path from `start`. In path mode the path must
   end at `target`; in cycle mode (target < 0) the last vertex must be
   adjacent to `start`.

   Pruning, all exact:
     - every unvisited vertex keeps enough usable neighbours (unvisited
       vertices, the current end, and in cycle mode the start): two, or one
       for the target;
     - an unvisited neighbour of the end with exactly two usable neighbours
       must be entered next, so two such neighbours are a dead end (except
       on the first step of a cycle);
     - the unvisited vertices stay connected through the current end.
 */
class HamSearch {
 public:
  HamSearch(const Graph& g, Vertex start, Vertex target, std::uint64_t budget)
      : g_(g), n_(g.order()), start_(start), target_(target), budget_(budget),
        adjacent_(static_cast<std::size_t>(n_) * n_, 0), visited_(n_, 0), free_deg_(n_), seen_(n_, 0) {
    for (auto [u, v] : g.edges()) {
      adjacent_[static_cast<std::size_t>(u) * n_ + v] = 1;
      adjacent_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
    for (Vertex v = 0; v < n_; ++v) free_deg_[v] = g.degree(v);
  }

  std::optional<std::vector<Vertex>> run() {
    remaining_ = n_;
    visit(start_);
    for (Vertex u = 0; u < n_; ++u) {
      if (!visited_[u] && avail(u, start_) < need(u)) return std::nullopt;
    }
    if (!connected_through(start_)) return std::nullopt;
    if (!extend(start_)) return std::nullopt;
    return path_;
  }

 private:
  bool adj(Vertex u, Vertex v) const { return adjacent_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  bool cycle_mode() const { return target_ < 0; }
  int need(Vertex u) const { return u == target_ ? 1 : 2; }

  int avail(Vertex u, Vertex cur) const {
    int count = free_deg_[u] + (adj(u, cur) ? 1 : 0);
    if (cycle_mode() && cur != start_ && adj(u, start_)) ++count;
    return count;
  }

  void visit(Vertex v) {
    visited_[v] = 1;
    --remaining_;
    for (Vertex w : g_.neighbors(v)) --free_deg_[w];
    path_.push_back(v);
  }

  void unvisit(Vertex v) {
    visited_[v] = 0;
    ++remaining_;
    for (Vertex w : g_.neighbors(v)) ++free_deg_[w];
    path_.pop_back();
  }

  bool locally_feasible(Vertex cur, Vertex prev) const {
    for (Vertex end : {cur, prev}) {
      for (Vertex u : g_.neighbors(end)) {
        if (!visited_[u] && avail(u, cur) < need(u)) return false;
      }
    }
    if (cycle_mode() && remaining_ > 0 && free_deg_[start_] == 0) return false;
    return true;
  }

  bool connected_through(Vertex cur) {
    if (remaining_ == 0) return true;
    std::fill(seen_.begin(), seen_.end(), 0);
    stack_.clear();
    for (Vertex u : g_.neighbors(cur)) {
      if (!visited_[u]) {
        seen_[u] = 1;
        stack_.push_back(u);
      }
    }
    int reached = static_cast<int>(stack_.size());
    while (!stack_.empty()) {
      Vertex u = stack_.back();
      stack_.pop_back();
      for (Vertex w : g_.neighbors(u)) {
        if (!visited_[w] && !seen_[w]) {
          seen_[w] = 1;
          ++reached;
          stack_.push_back(w);
        }
      }
    }
    return reached == remaining_;
  }

  bool extend(Vertex cur) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::Indeterminate, "search node budget of " + std::to_string(budget_) + " exhausted");
    }
    if (remaining_ == 0) return cycle_mode() ? adj(cur, start_) : cur == target_;

    std::vector<Vertex> candidates;
    Vertex forced = -1;
    for (Vertex w : g_.neighbors(cur)) {
      if (visited_[w]) continue;
      if (w == target_) {
        if (remaining_ == 1) candidates.push_back(w);
        else if (avail(w, cur) == 1) return false;  // target would have to come next
        continue;
      }
      // At the start of a cycle a neighbour of the start may also come last.
      if (avail(w, cur) == 2 && !(cycle_mode() && cur == start_)) {
        if (forced >= 0) return false;
        forced = w;
      }
      candidates.push_back(w);
    }
    if (forced >= 0) {
      candidates.assign(1, forced);
    } else {
      std::sort(candidates.begin(), candidates.end(), [this](Vertex a, Vertex b) {
        return free_deg_[a] != free_deg_[b] ? free_deg_[a] < free_deg_[b] : a < b;
      });
    }
    for (Vertex w : candidates) {
      visit(w);
      if (locally_feasible(w, cur) && connected_through(w) && extend(w)) return true;
      unvisit(w);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  Vertex start_;
  Vertex target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> adjacent_;
  std::vector<char> visited_;
  std::vector<int> free_deg_;
  std::vector<char> seen_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> path_;
  int remaining_ = 0;
};

}  // namespace

std::optional<HamWitness> hamiltonian_cycle(const Graph& g, const SearchOptions& opts) {
  if (g.order() < 3) throw Error(ErrorCode::TooSmall, "Hamiltonian cycles need n >= 3");
  HamSearch search(g, 0, -1, opts.node_budget);
  auto found = search.run();
  if (!found) return std::nullopt;
  return HamWitness{std::move(*found), WitnessKind::Cycle};
}

std::optional<HamWitness> hamiltonian_path(const Graph& g, Vertex s, Vertex t, const SearchOptions& opts) {
  if (s == t) throw Error(ErrorCode::SameEndpoints, "path endpoints must differ");
  if (!g.contains(s) || !g.contains(t)) throw Error(ErrorCode::OutOfRange, "path endpoint out of range");
  HamSearch search(g, s, t, opts.node_budget);
  auto found = search.run();
  if (!found) return std::nullopt;
  return HamWitness{std::move(*found), WitnessKind::Path};
}

namespace {

// Runs `job(i)` for i in [0, count) on up to `threads` workers. If jobs
// throw, the exception of the smallest index is rethrown.
template <typename Job>
void parallel_for(std::size_t count, unsigned threads, Job job) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = count;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (i < failure_index) {
          failure = std::current_exception();
          failure_index = i;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

HamiltonianConnectivity is_hamiltonian_connected(const Graph& g, const SearchOptions& opts) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorCode::TooSmall, "Hamiltonian-connectedness needs n >= 3");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::optional<HamWitness>> found(pairs.size());
  parallel_for(pairs.size(), opts.threads,
               [&](std::size_t i) { found[i] = hamiltonian_path(g, pairs[i].first, pairs[i].second, opts); });
  HamiltonianConnectivity out;
  out.verdict = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (found[i]) {
      out.witnesses.emplace(pairs[i], std::move(*found[i]));
    } else if (out.verdict) {
      out.verdict = false;
      out.failing_pair = pairs[i];
    }
  }
  return out;
}

HamWitness lift_path(const HamWitness& w, const StellatedMap& s, const Graph& g) {
  const auto& vs = w.vertices;
  if (vs.empty()) throw Error(ErrorCode::InvalidWitness, "empty witness");
  if (s.is_stellating(vs.front()) || s.is_stellating(vs.back())) {
    throw Error(ErrorCode::EndpointStellating, "path endpoints must be initial vertices");
  }
  HamWitness out;
  out.kind = WitnessKind::Path;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!s.is_stellating(vs[i])) {
      out.vertices.push_back(vs[i]);
      continue;
    }
    if (s.is_stellating(vs[i - 1]) || s.is_stellating(vs[i + 1])) {
      throw Error(ErrorCode::AdjacentStellating, "two stellating vertices are consecutive on the path");
    }
  }
  for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
    if (!g.adjacent(out.vertices[i], out.vertices[i + 1])) {
      throw Error(ErrorCode::MissingEdge, "lifted edge " + std::to_string(out.vertices[i]) + "-" +
                                              std::to_string(out.vertices[i + 1]) + " is not in the graph");
    }
  }
  if (!verify_witness(g, out)) throw Error(ErrorCode::InvalidWitness, "lifted path is not Hamiltonian");
  return out;
}

Theorem1Pipeline::Theorem1Pipeline(const OpDrawing& d, SearchOptions opts)
    : graph_(abstract_graph(d)), opts_(opts) {
  const Graph skeleton = d.skeleton.graph();
  auto gir = girth(skeleton);
  if (gir && *gir < 4) {
    throw Error(ErrorCode::GirthTooSmall, "skeleton girth is " + std::to_string(*gir));
  }
  stellated_ = stellate(d.skeleton);
  stellated_graph_ = stellated_.map.graph();
  if (vertex_connectivity(stellated_graph_) < 4) {
    throw Error(ErrorCode::TheoremViolation, "stellated skeleton is not 4-connected");
  }
}

HamWitness Theorem1Pipeline::path(Vertex x, Vertex y) const {
  if (x == y) throw Error(ErrorCode::SameEndpoints, "path endpoints must differ");
  if (!graph_.contains(x) || !graph_.contains(y)) throw Error(ErrorCode::OutOfRange, "endpoint is not a skeleton vertex");
  auto found = hamiltonian_path(stellated_graph_, x, y, opts_);
  if (!found) {
    throw Error(ErrorCode::SearchExhausted,
                "no Hamiltonian path in a 4-connected planar triangulation between " + std::to_string(x) + " and " +
                    std::to_string(y));
  }
  return lift_path(*found, stellated_, graph_);
}

HamWitness theorem1_pipeline(const OpDrawing& d, Vertex x, Vertex y, const SearchOptions& opts) {
  if (x == y) throw Error(ErrorCode::SameEndpoints, "path endpoints must differ");
  return Theorem1Pipeline(d, opts).path(x, y);
}

Certificate non_hamiltonian_certificate(const Graph& g, const VertexSet& s) {
  Certificate cert;
  cert.cut = make_vertex_set(s);
  if (cert.cut.empty()) throw Error(ErrorCode::BadCut, "cut is empty");
  if (static_cast<int>(cert.cut.size()) >= g.order()) throw Error(ErrorCode::BadCut, "cut covers every vertex");
  for (Vertex v : cert.cut) {
    if (!g.contains(v)) throw Error(ErrorCode::BadCut, "cut vertex " + std::to_string(v) + " out of range");
  }
  const auto parts = components(remove_vertices(g, cert.cut).graph);
  cert.component_count = static_cast<int>(parts.size());
  for (const auto& part : parts) {
    if (part.size() % 2 == 1) ++cert.odd_component_count;
  }
  const int size = static_cast<int>(cert.cut.size());
  if (cert.component_count > size) {
    cert.verdict = CertificateVerdict::NonHamiltonian;
  } else if (cert.odd_component_count > size) {
    cert.verdict = CertificateVerdict::NoPerfectMatchingBound;
  } else {
    cert.verdict = CertificateVerdict::Inconclusive;
  }
  return cert;
}

std::vector<Edge> matching_from_hamiltonian(const HamWitness& w) {
  const auto& vs = w.vertices;
  if (vs.size() < 2) throw Error(ErrorCode::InvalidWitness, "witness needs at least two vertices");
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidWitness, "witness repeats a vertex");
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) out.push_back(std::minmax(vs[i], vs[i + 1]));
  return out;
}

}  // namespace penta2p
