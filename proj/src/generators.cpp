#include "penta2p/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "penta2p/error.hpp"

namespace penta2p {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

std::array<double, 2> polar(double radius, double degrees) {
  return {radius * std::cos(degrees * kDegree), radius * std::sin(degrees * kDegree)};
}

// Inserts a new vertex into the face whose boundary is `cycle` (traversal
// order) and joins it to every boundary vertex.
void insert_star(std::vector<std::vector<Vertex>>& rotations, const std::vector<Vertex>& cycle) {
  const Vertex hub = static_cast<Vertex>(rotations.size());
  const std::size_t len = cycle.size();
  for (std::size_t j = 0; j < len; ++j) {
    Vertex prev = cycle[(j + len - 1) % len];
    auto& row = rotations[cycle[j]];
    auto it = std::find(row.begin(), row.end(), prev);
    row.insert(it + 1, hub);
  }
  rotations.emplace_back(cycle.rbegin(), cycle.rend());
}

}  // namespace

std::vector<Vertex> Gadget::interior() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < map.order(); ++v) {
    if (std::find(outer.begin(), outer.end(), v) == outer.end()) out.push_back(v);
  }
  return out;
}

void validate_gadget(const Gadget& g) {
  auto report = validate_map(g.map);
  if (!report.ok()) throw Error(ErrorCode::BadGadget, report.violations.front());
  const auto all = g.map.trace_faces();
  const auto [x, y, z] = g.outer;
  const std::array<Vertex, 3> key{x, z, y};
  const int outer = find_face(all, key);
  if (outer < 0) throw Error(ErrorCode::BadGadget, "outer triangle is not a face traversed x->z->y");
  for (std::size_t f = 0; f < all.size(); ++f) {
    if (static_cast<int>(f) == outer) continue;
    std::set<Vertex> distinct(all[f].boundary.begin(), all[f].boundary.end());
    if (all[f].length() != 5 || distinct.size() != 5) {
      throw Error(ErrorCode::BadGadget, "face " + std::to_string(f) + " is not a pentagon");
    }
  }
}

PlaneMap dodecahedron() {
  static constexpr std::array<std::array<double, 2>, 20> coords{{
      {6.27737, 2.03974},   {-4.59854, -1.4923},  {0, 6.60178},         {3.88078, -5.34063},
      {-6.27737, 2.03974},  {-3.88078, -5.34063}, {0, 10},              {5.87591, -8.09002},
      {1.22466, 1.68694},   {1.98297, -0.644769}, {-9.50933, 3.09002},  {-5.87997, -8.09002},
      {-1.98297, -0.644769}, {2.83861, 3.91322},  {4.59448, -1.49635},  {9.50933, 3.09002},
      {-1.22466, 1.68694},  {0, -2.08435},        {-2.83861, 3.91322},  {0, -4.83374},
  }};
  // Uncrossed edges of the source drawing, 1-based as drawn.
  static constexpr std::array<Edge, 30> drawn{{
      {1, 14},  {1, 15},  {1, 16},  {2, 5},   {2, 6},   {2, 13},  {3, 7},   {3, 14},  {3, 19},  {4, 8},
      {4, 15},  {4, 20},  {5, 11},  {5, 19},  {6, 12},  {6, 20},  {7, 11},  {7, 16},  {8, 12},  {8, 16},
      {9, 10},  {9, 14},  {9, 17},  {10, 15}, {10, 18}, {11, 12}, {13, 17}, {13, 18}, {17, 19}, {18, 20},
  }};
  std::vector<Edge> edges;
  for (auto [u, v] : drawn) edges.emplace_back(u - 1, v - 1);
  return embed_straight_line(coords, edges);
}

PlaneMap prism(int s) {
  if (s < 3) throw Error(ErrorCode::TooSmall, "prism needs s >= 3");
  std::vector<std::array<double, 2>> coords;
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) coords.push_back(polar(2.0, 360.0 * i / s));
  for (int i = 0; i < s; ++i) coords.push_back(polar(1.0, 360.0 * i / s));
  for (int i = 0; i < s; ++i) {
    edges.emplace_back(i, (i + 1) % s);
    edges.emplace_back(s + i, s + (i + 1) % s);
    edges.emplace_back(i, s + i);
  }
  return embed_straight_line(coords, edges);
}

PlaneMap stacked_triangulation(int l) {
  if (l < 4) throw Error(ErrorCode::TooSmall, "stacked triangulation needs l >= 4");
  const std::array<std::array<double, 2>, 4> coords{{polar(1, 90), polar(1, 210), polar(1, 330), {0, 0}}};
  const std::array<Edge, 6> k4{{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}};
  auto rotations = embed_straight_line(coords, k4).rotations();
  while (static_cast<int>(rotations.size()) < l) {
    PlaneMap current(rotations);
    insert_star(rotations, current.trace_faces().front().boundary);
  }
  return PlaneMap(std::move(rotations));
}

Gadget gadget_h() {
  // Numbering: 0 centre, 1-3 outer corners, 4-6 second ring, 7-15 nine-cycle,
  // 16-21 six inner vertices, 22-24 spokes around the centre.
  std::vector<std::array<double, 2>> coords;
  coords.push_back({0, 0});
  for (int i = 1; i <= 3; ++i) coords.push_back(polar(1.0, -30 + 120 * i));
  for (int i = 1; i <= 3; ++i) coords.push_back(polar(0.8, -30 + 120 * i));
  for (int i = 1; i <= 9; ++i) coords.push_back(polar(0.35, -50 + 40 * i));
  for (int i = 1; i <= 6; ++i) coords.push_back(polar(0.2, -60 + 60 * i));
  for (int i = 1; i <= 3; ++i) coords.push_back(polar(0.1, -30 + 120 * i));
  auto corner = [](int i) { return i; };
  auto ring = [](int i) { return 3 + i; };
  auto nine = [](int i) { return 6 + i; };
  auto six = [](int i) { return 15 + i; };
  auto spoke = [](int i) { return 21 + i; };

  std::vector<Edge> edges{{corner(1), corner(2)}, {corner(2), corner(3)}, {corner(3), corner(1)}};
  for (int i = 1; i <= 3; ++i) edges.emplace_back(corner(i), ring(i));
  for (int i = 1; i <= 9; ++i) edges.emplace_back(nine(i), nine(i == 1 ? 9 : i - 1));
  edges.insert(edges.end(), {{ring(1), nine(2)}, {ring(2), nine(5)}, {ring(3), nine(8)}});
  edges.insert(edges.end(), {{ring(1), nine(5)}, {ring(2), nine(8)}, {ring(3), nine(2)}});
  edges.insert(edges.end(), {{six(1), nine(1)}, {six(2), nine(3)}, {six(3), nine(4)},
                             {six(4), nine(6)}, {six(5), nine(7)}, {six(6), nine(9)}});
  edges.insert(edges.end(), {{six(1), six(2)}, {six(3), six(4)}, {six(5), six(6)}});
  edges.insert(edges.end(), {{spoke(1), six(2)}, {spoke(1), six(3)}, {spoke(2), six(4)},
                             {spoke(2), six(5)}, {spoke(3), six(6)}, {spoke(3), six(1)}});
  edges.insert(edges.end(), {{0, spoke(1)}, {0, spoke(2)}, {0, spoke(3)}});

  Gadget g;
  g.map = embed_straight_line(coords, edges);
  // Corner 2 sits lower left (x), corner 3 lower right (y), corner 1 on top (z).
  g.outer = {corner(2), corner(3), corner(1)};
  g.map.set_outer_face(std::vector<Vertex>{g.outer[0], g.outer[2], g.outer[1]});
  return g;
}

Gadget gadget_f() {
  static constexpr std::array<std::array<double, 2>, 28> coords{{
      {0.40493, 1.34303},     {0.73566, -0.027607},   {1.12538, -0.678476},  {1.90671, 0.08604},
      {0.94289, 2.3653},      {-0.040971, 3.91205},   {-1.09817, 2.05653},   {-0.538761, 1.3414},
      {-0.773038, -0.025374}, {-0.023328, -0.672376}, {-0.032605, -1.71415}, {1.00876, -1.44386},
      {0.858506, -2.53896},   {2.15186, -1.4037},     {3.01538, -2.08319},   {3.0509, 2.94508},
      {-0.005578, 5.20314},   {-2.96763, 2.91433},    {-2.26418, -1.21295},  {-1.81479, 0.816147},
      {-1.13203, -1.07014},   {-0.933245, -1.7512},   {-0.835106, -2.56931}, {-0.0015094, -3.99915},
      {8.66025, -5},          {0, 10},                {-2.9848, -2.01994},   {-8.66025, -5},
  }};
  static constexpr std::array<Edge, 44> edges{{
      {0, 1},   {0, 4},   {0, 7},   {1, 2},   {1, 9},   {2, 3},   {2, 11},  {3, 4},   {3, 13},
      {4, 5},   {4, 15},  {5, 6},   {5, 17},  {6, 7},   {6, 19},  {7, 8},   {8, 9},   {8, 20},
      {9, 10},  {10, 11}, {10, 21}, {11, 12}, {12, 13}, {12, 22}, {13, 14}, {14, 15}, {14, 23},
      {14, 24}, {15, 16}, {16, 17}, {16, 25}, {17, 18}, {17, 26}, {18, 19}, {18, 22}, {19, 20},
      {20, 21}, {21, 22}, {22, 23}, {23, 26}, {26, 27}, {27, 24}, {24, 25}, {25, 27},
  }};
  Gadget g;
  g.map = embed_straight_line(coords, edges);
  g.outer = {27, 24, 25};
  g.map.set_outer_face(std::vector<Vertex>{27, 25, 24});
  return g;
}

PlaneMap theorem2_pentagulation(int l, const Gadget& gadget) {
  if (l < 5) throw Error(ErrorCode::TooSmall, "construction needs l >= 5");
  validate_gadget(gadget);
  const PlaneMap base = stacked_triangulation(l);
  const auto base_faces = base.trace_faces();
  const auto owner = base.dart_faces();
  const auto inner = gadget.interior();
  const int per_face = static_cast<int>(inner.size());
  const int total = l + per_face * static_cast<int>(base_faces.size());

  // relabel[f][v]: id in the result of gadget vertex v planted in face f.
  std::vector<std::vector<Vertex>> relabel(base_faces.size(), std::vector<Vertex>(gadget.map.order(), -1));
  for (std::size_t f = 0; f < base_faces.size(); ++f) {
    const auto& tri = base_faces[f].boundary;
    for (int c = 0; c < 3; ++c) relabel[f][gadget.outer[c]] = tri[c];
    for (int i = 0; i < per_face; ++i) relabel[f][inner[i]] = l + static_cast<int>(f) * per_face + i;
  }

  std::vector<std::vector<Vertex>> rotations(total);
  for (std::size_t f = 0; f < base_faces.size(); ++f) {
    for (Vertex v : inner) {
      auto& row = rotations[relabel[f][v]];
      for (Vertex w : gadget.map.rotation(v)) row.push_back(relabel[f][w]);
    }
  }
  // A base corner keeps its rotation; each angle (r_k, r_k+1) is the corner
  // of one host face and receives the gadget's interior neighbours there.
  for (Vertex v = 0; v < l; ++v) {
    auto rot = base.rotation(v);
    const std::size_t d = rot.size();
    for (std::size_t k = 0; k < d; ++k) {
      Vertex from = rot[k];
      Vertex to = rot[(k + 1) % d];
      rotations[v].push_back(from);
      auto back = base.rotation(from);
      const int pos = static_cast<int>(std::find(back.begin(), back.end(), v) - back.begin());
      const int f = owner[from][pos];
      const auto& map_f = relabel[f];
      auto corner_of = [&](Vertex target) {
        for (int c = 0; c < 3; ++c) {
          if (map_f[gadget.outer[c]] == target) return gadget.outer[c];
        }
        throw Error(ErrorCode::BadGadget, "face corner mismatch");
      };
      const Vertex g_v = corner_of(v);
      const Vertex g_from = corner_of(from);
      const Vertex g_to = corner_of(to);
      auto grot = gadget.map.rotation(g_v);
      const std::size_t gd = grot.size();
      std::size_t start = static_cast<std::size_t>(std::find(grot.begin(), grot.end(), g_from) - grot.begin());
      for (std::size_t step = 1; step < gd; ++step) {
        Vertex w = grot[(start + step) % gd];
        if (w == g_to) break;
        if (std::find(gadget.outer.begin(), gadget.outer.end(), w) != gadget.outer.end()) {
          throw Error(ErrorCode::BadGadget, "gadget corner orientation does not match host face");
        }
        rotations[v].push_back(map_f[w]);
      }
    }
  }
  PlaneMap out(std::move(rotations));
  VertexSet frame(l);
  for (Vertex v = 0; v < l; ++v) frame[v] = v;
  out.set_frame(std::move(frame));
  return out;
}

}  // namespace penta2p
