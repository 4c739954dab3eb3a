// Generates the polyhedron catalog data files.
//
// The five seed solids come from exact coordinate tables; everything else is
// derived combinatorially (truncation, rectification, alternation, cupola
// twist) with coordinates carried along only to read off a consistent
// rotation system. Every entry is validated (regularity, 3-connectedness,
// spherical Euler count, constant vertex symbol) before it is written.

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "cospec/planar.hpp"
#include "cospec/symmetry.hpp"
#include "cospec/walk.hpp"

using namespace cospec;
using nlohmann::json;

namespace {

using Vec3 = std::array<double, 3>;

struct Solid {
  Graph g;
  std::vector<Vec3> pts;
  RotationSystem rot;  // derived from pts
};

Solid finish(int n, const std::vector<std::pair<int, int>>& edges, std::vector<Vec3> pts) {
  Solid s;
  s.g = Graph::build(n, edges);
  s.pts = std::move(pts);
  s.rot = rotation_from_coordinates(s.g, s.pts);
  return s;
}

// Adjacency = vertex pairs at the minimum pairwise distance (all edges of a
// uniform solid have the same length).
Solid from_points(std::vector<Vec3> pts) {
  const int n = int(pts.size());
  auto dist2 = [&](int a, int b) {
    double s = 0;
    for (int i = 0; i < 3; ++i) {
      const double d = pts[size_t(a)][size_t(i)] - pts[size_t(b)][size_t(i)];
      s += d * d;
    }
    return s;
  };
  double mn = 1e100;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) mn = std::min(mn, dist2(a, b));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (dist2(a, b) < mn * 1.02) edges.emplace_back(a, b);
  return finish(n, edges, std::move(pts));
}

std::vector<Vec3> sign_combinations(const Vec3& v) {
  std::set<Vec3> out;
  for (int m = 0; m < 8; ++m)
    out.insert({(m & 1) ? -v[0] : v[0], (m & 2) ? -v[1] : v[1], (m & 4) ? -v[2] : v[2]});
  return {out.begin(), out.end()};
}

std::vector<Vec3> cyclic_signed(const Vec3& v) {
  std::set<Vec3> out;
  for (const Vec3 base : {Vec3{v[0], v[1], v[2]}, Vec3{v[2], v[0], v[1]}, Vec3{v[1], v[2], v[0]}})
    for (const auto& s : sign_combinations(base)) out.insert(s);
  return {out.begin(), out.end()};
}

std::vector<Vec3> concat(std::initializer_list<std::vector<Vec3>> parts) {
  std::vector<Vec3> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const double kPhi = (1 + std::sqrt(5.0)) / 2;

Solid tetrahedron() {
  return from_points({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}
Solid cube() { return from_points(sign_combinations({1, 1, 1})); }
Solid octahedron() { return from_points(cyclic_signed({1, 0, 0})); }
Solid dodecahedron() {
  return from_points(
      concat({sign_combinations({1, 1, 1}), cyclic_signed({0, 1 / kPhi, kPhi})}));
}
Solid icosahedron() { return from_points(cyclic_signed({0, 1, kPhi})); }
Solid rhombicuboctahedron_raw() {
  return from_points(concat({cyclic_signed({1, 1, 1 + std::sqrt(2.0)})}));
}

// Truncation: one vertex per dart (u, v) placed at u + (v - u)/3. A dart is
// joined to its reverse and to the next dart around its tail vertex.
Solid truncate_solid(const Solid& s) {
  const int n = s.g.n();
  std::map<std::pair<int, int>, int> id;
  std::vector<Vec3> pts;
  for (int u = 0; u < n; ++u)
    for (int v : s.rot.order[size_t(u)]) {
      id[{u, v}] = int(pts.size());
      Vec3 p;
      for (int i = 0; i < 3; ++i)
        p[size_t(i)] = s.pts[size_t(u)][size_t(i)] +
                       (s.pts[size_t(v)][size_t(i)] - s.pts[size_t(u)][size_t(i)]) / 3.0;
      pts.push_back(p);
    }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    const auto& cyc = s.rot.order[size_t(u)];
    const int d = int(cyc.size());
    for (int i = 0; i < d; ++i) {
      const int v = cyc[size_t(i)];
      if (u < v) edges.emplace_back(id[{u, v}], id[{v, u}]);
      edges.emplace_back(id[{u, v}], id[{u, cyc[size_t((i + 1) % d)]}]);
    }
  }
  const int nn = int(pts.size());
  return finish(nn, edges, std::move(pts));
}

// Rectification: one vertex per edge (at its midpoint); two midpoints are
// joined when their edges are consecutive around a common endpoint.
Solid ambo(const Solid& s) {
  const int n = s.g.n();
  std::map<std::pair<int, int>, int> id;
  std::vector<Vec3> pts;
  for (auto [u, v] : s.g.edges()) {
    id[{u, v}] = id[{v, u}] = int(pts.size());
    pts.push_back({(s.pts[size_t(u)][0] + s.pts[size_t(v)][0]) / 2,
                   (s.pts[size_t(u)][1] + s.pts[size_t(v)][1]) / 2,
                   (s.pts[size_t(u)][2] + s.pts[size_t(v)][2]) / 2});
  }
  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    const auto& cyc = s.rot.order[size_t(u)];
    const int d = int(cyc.size());
    for (int i = 0; i < d; ++i) {
      int a = id[{u, cyc[size_t(i)]}], b = id[{u, cyc[size_t((i + 1) % d)]}];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  const int nn = int(pts.size());
  return finish(nn, {edges.begin(), edges.end()}, std::move(pts));
}

// Alternation of a bipartite solid: keep one colour class; kept vertices two
// apart on a common face become adjacent. Digon faces collapse into edges.
Solid alternate(const Solid& s) {
  const int n = s.g.n();
  std::vector<int> color(size_t(n), -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    s.g.row(u).for_each([&](int w) {
      if (color[size_t(w)] == -1) {
        color[size_t(w)] = 1 - color[size_t(u)];
        queue.push_back(w);
      } else if (color[size_t(w)] == color[size_t(u)]) {
        fail(Errc::ParameterOutOfRange, "alternation requires a bipartite solid");
      }
    });
  }
  std::vector<int> keep_id(size_t(n), -1);
  std::vector<Vec3> pts;
  for (int v = 0; v < n; ++v)
    if (color[size_t(v)] == 0) {
      keep_id[size_t(v)] = int(pts.size());
      pts.push_back(s.pts[size_t(v)]);
    }
  std::set<std::pair<int, int>> edges;
  for (const auto& face : faces(s.g, s.rot)) {
    const int L = face.length();
    for (int i = 0; i < L; ++i) {
      const int a = keep_id[size_t(face.boundary[size_t(i)])];
      const int b = keep_id[size_t(face.boundary[size_t((i + 2) % L)])];
      if (a >= 0 && b >= 0 && a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  const int nn = int(pts.size());
  return finish(nn, {edges.begin(), edges.end()}, std::move(pts));
}

// Cupola twist: rotate the top cap (the 12 vertices with z > 0) of the
// rhombicuboctahedron by 45 degrees. Edge lengths are preserved exactly, so
// the minimum-distance adjacency rule still applies.
Solid twisted_solid() {
  auto pts = rhombicuboctahedron_raw().pts;
  const double a = M_PI / 4, c = std::cos(a), sn = std::sin(a);
  for (auto& p : pts)
    if (p[2] > 0.5) p = {c * p[0] - sn * p[1], sn * p[0] + c * p[1], p[2]};
  return from_points(std::move(pts));
}

struct Entry {
  std::string name;
  Solid solid;
  std::vector<int> symbol;
  bool walk_regular = true;
};

void validate(const Entry& e) {
  const Solid& s = e.solid;
  const auto er = verify_embedding(s.g, s.rot);
  if (!er.spherical || er.face_identity != true)
    fail(Errc::AuditFailure, e.name + ": embedding is not spherical");
  if (vertex_connectivity(s.g) < 3) fail(Errc::AuditFailure, e.name + ": not 3-connected");
  const auto want = normalize_symbol(e.symbol);
  for (int v = 0; v < s.g.n(); ++v)
    if (!(schlafli(s.g, s.rot, v) == want))
      fail(Errc::AuditFailure, e.name + ": vertex symbol mismatch at " + std::to_string(v));
  if (is_walk_regular(s.g) != e.walk_regular)
    fail(Errc::AuditFailure, e.name + ": unexpected walk-regularity");
}

void write_entry(const std::filesystem::path& dir, const Entry& e) {
  CatalogEntry ce;
  ce.name = e.name;
  ce.graph = e.solid.g;
  ce.rotation = e.solid.rot;
  ce.expected_symbol = normalize_symbol(e.symbol);
  ce.expected_walk_regular = e.walk_regular;
  json j;
  j["name"] = e.name;
  j["n"] = e.solid.g.n();
  json edges = json::array();
  for (auto [u, v] : e.solid.g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["rotation"] = e.solid.rot.order;
  j["expected_symbol"] = ce.expected_symbol.lengths;
  j["expected_walk_regular"] = e.walk_regular;
  j["checksum"] = catalog_checksum(ce);
  std::ofstream out(dir / (e.name + ".json"));
  out << j.dump(1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data/catalog";
  std::filesystem::create_directories(dir);

  const Solid C = cube(), D = dodecahedron();
  const Solid aC = ambo(C), aD = ambo(D);
  const Solid taC = truncate_solid(aC), taD = truncate_solid(aD);

  std::vector<Entry> entries;
  entries.push_back({"tetrahedron", tetrahedron(), {3, 3, 3}});
  entries.push_back({"cube", C, {4, 4, 4}});
  entries.push_back({"octahedron", octahedron(), {3, 3, 3, 3}});
  entries.push_back({"dodecahedron", D, {5, 5, 5}});
  entries.push_back({"icosahedron", icosahedron(), {3, 3, 3, 3, 3}});
  entries.push_back({"truncated-tetrahedron", truncate_solid(tetrahedron()), {3, 6, 6}});
  entries.push_back({"cuboctahedron", aC, {3, 4, 3, 4}});
  entries.push_back({"truncated-cube", truncate_solid(C), {3, 8, 8}});
  entries.push_back({"truncated-octahedron", truncate_solid(octahedron()), {4, 6, 6}});
  entries.push_back({"rhombicuboctahedron", ambo(aC), {3, 4, 4, 4}});
  entries.push_back({"truncated-cuboctahedron", taC, {4, 6, 8}});
  entries.push_back({"snub-cube", alternate(taC), {3, 3, 3, 3, 4}});
  entries.push_back({"icosidodecahedron", aD, {3, 5, 3, 5}});
  entries.push_back({"truncated-dodecahedron", truncate_solid(D), {3, 10, 10}});
  entries.push_back({"truncated-icosahedron", truncate_solid(icosahedron()), {5, 6, 6}});
  entries.push_back({"rhombicosidodecahedron", ambo(aD), {3, 4, 5, 4}});
  entries.push_back({"truncated-icosidodecahedron", taD, {4, 6, 10}});
  entries.push_back({"snub-dodecahedron", alternate(taD), {3, 3, 3, 3, 5}});
  entries.push_back({"pseudo-rhombicuboctahedron", twisted_solid(), {3, 4, 4, 4}, false});

  for (const auto& e : entries) {
    validate(e);
    write_entry(dir, e);
    std::cout << e.name << ": n=" << e.solid.g.n() << " e=" << e.solid.g.edge_count() << " ok\n";
  }
  return 0;
}
