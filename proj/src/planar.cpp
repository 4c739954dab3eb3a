#include "cospec/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cospec/error.hpp"
#include "cospec/walk.hpp"

namespace cospec {

std::string SchlafliSymbol::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << ',';
    os << lengths[i];
  }
  os << ')';
  return os.str();
}

SchlafliSymbol normalize_symbol(std::vector<int> lengths) {
  const int d = int(lengths.size());
  if (d == 0) fail(Errc::ParameterOutOfRange, "empty face-length tuple");
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < d; ++s) {
      std::vector<int> cand(d);
      for (int i = 0; i < d; ++i) cand[i] = lengths[size_t((s + i) % d)];
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(lengths.begin(), lengths.end());
  }
  return SchlafliSymbol{best};
}

namespace {

// Darts indexed per tail vertex: dart (v, rot[v][i]) has id base[v] + i.
struct DartMap {
  std::vector<int> base;        // base[v]
  std::vector<int> pos;         // pos[v * n + u] = index of u in rot[v]
  int n = 0, darts = 0;

  DartMap(const Graph& g, const RotationSystem& rot) : n(g.n()) {
    if (g.has_loops()) fail(Errc::InvalidRotation, "rotation systems require a loopless graph");
    if (int(rot.order.size()) != n) fail(Errc::InvalidRotation, "rotation has wrong vertex count");
    base.assign(n + 1, 0);
    pos.assign(size_t(n) * n, -1);
    for (int v = 0; v < n; ++v) {
      const auto& cyc = rot.order[v];
      if (int(cyc.size()) != g.degree(v))
        fail(Errc::InvalidRotation, "rotation at vertex " + std::to_string(v) +
                                        " does not list every neighbour once");
      for (int i = 0; i < int(cyc.size()); ++i) {
        const int u = cyc[size_t(i)];
        if (u < 0 || u >= n || !g.has_edge(v, u) || pos[size_t(v) * n + u] != -1)
          fail(Errc::InvalidRotation, "rotation at vertex " + std::to_string(v) +
                                          " is not a cyclic order of its neighbours");
        pos[size_t(v) * n + u] = i;
      }
      base[v + 1] = base[v] + int(cyc.size());
    }
    darts = base[n];
  }

  int id(int u, int v) const { return base[u] + pos[size_t(u) * n + v]; }
};

struct FaceSet {
  std::vector<Face> list;
  std::vector<int> face_of_dart;  // by dart id
};

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  DartMap dm(g, rot);
  FaceSet fs;
  fs.face_of_dart.assign(size_t(dm.darts), -1);
  for (int v = 0; v < g.n(); ++v) {
    for (int i = 0; i < int(rot.order[v].size()); ++i) {
      if (fs.face_of_dart[size_t(dm.base[v] + i)] != -1) continue;
      Face face;
      const int fid = int(fs.list.size());
      int u = v, w = rot.order[v][size_t(i)];
      do {
        fs.face_of_dart[size_t(dm.id(u, w))] = fid;
        face.boundary.push_back(u);
        // successor of dart (u, w): the dart (w, x) where x follows u in rot[w]
        const int j = dm.pos[size_t(w) * g.n() + u];
        const int x = rot.order[w][size_t((j + 1) % rot.order[w].size())];
        u = w;
        w = x;
      } while (!(u == v && w == rot.order[v][size_t(i)]));
      fs.list.push_back(std::move(face));
    }
  }
  return fs;
}

}  // namespace

std::vector<Face> faces(const Graph& g, const RotationSystem& rot) {
  return trace_faces(g, rot).list;
}

EulerReport verify_embedding(const Graph& g, const RotationSystem& rot) {
  const auto fs = trace_faces(g, rot);
  EulerReport r;
  r.n = g.n();
  r.e = int(g.edge_count());
  r.f = int(fs.list.size());
  r.euler_characteristic = r.n - r.e + r.f;
  r.spherical = (r.euler_characteristic == 2);
  const int d = g.degree(0);
  const auto degrees = g.degree_sequence();
  const bool regular = std::all_of(degrees.begin(), degrees.end(), [&](int x) { return x == d; });
  if (regular && d >= 1) {
    // sum over vertices of p(v) = sum of reciprocal incident-face lengths,
    // against (d-2)/2 + 2/n averaged identity, all in exact rationals.
    Rational total(0);
    for (const auto& face : fs.list) total += Rational(face.length(), face.length());  // = 1 each
    // Recompute p(v) per vertex explicitly rather than relying on the
    // one-per-face shortcut, so a broken dart-face map is caught.
    Rational sum(0);
    DartMap dm(g, rot);
    for (int v = 0; v < r.n; ++v)
      for (int i = 0; i < int(rot.order[v].size()); ++i)
        sum += Rational(1, fs.list[size_t(fs.face_of_dart[size_t(dm.base[v] + i)])].length());
    const Rational rhs = Rational(r.n) * (Rational(d - 2, 2) + Rational(2, r.n));
    r.face_identity = (sum == rhs) && (total == Rational(r.f));
  }
  return r;
}

SchlafliSymbol schlafli(const Graph& g, const RotationSystem& rot, VertexId v) {
  const auto fs = trace_faces(g, rot);
  DartMap dm(g, rot);
  std::vector<int> lens;
  for (int i = 0; i < int(rot.order[v].size()); ++i)
    lens.push_back(fs.list[size_t(fs.face_of_dart[size_t(dm.base[v] + i)])].length());
  return normalize_symbol(std::move(lens));
}

std::vector<std::vector<int>> chordless_cycles(const Graph& g, int m) {
  if (m < 3 || m > g.n()) fail(Errc::LengthOutOfRange, "cycle length " + std::to_string(m));
  std::vector<std::vector<int>> out;
  for_each_cycle(g, m, [&](const std::vector<int>& cyc) {
    if (int(cyc.size()) != m) return;
    for (int i = 0; i < m; ++i)
      for (int j = i + 2; j < m; ++j) {
        if (i == 0 && j == m - 1) continue;
        if (g.has_edge(cyc[size_t(i)], cyc[size_t(j)])) return;
      }
    out.push_back(cyc);
  });
  return out;
}

bool is_planar(const Graph& g) {
  const int n = g.n();
  if (n <= 4) return true;
  long long e = 0;  // loops are drawable in any face and never affect planarity
  for (auto [u, v] : g.edges())
    if (u != v) ++e;
  if (e > 3LL * n - 6) return false;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg{size_t(n)};
  for (auto [u, v] : g.edges())
    if (u != v) boost::add_edge(size_t(u), size_t(v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
  const int m = int(cyc.size());
  const auto mn = std::min_element(cyc.begin(), cyc.end());
  const int s = int(mn - cyc.begin());
  std::vector<int> fwd(m), bwd(m);
  for (int i = 0; i < m; ++i) {
    fwd[size_t(i)] = cyc[size_t((s + i) % m)];
    bwd[size_t(i)] = cyc[size_t((s - i + m) % m)];
  }
  return std::min(fwd, bwd);
}

}  // namespace

bool cycle_is_face(const std::vector<Face>& fs, const std::vector<int>& cycle) {
  const auto key = canonical_cycle(cycle);
  for (const auto& face : fs) {
    if (face.length() != int(cycle.size())) continue;
    if (canonical_cycle(face.boundary) == key) return true;
  }
  return false;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 unit(const Vec3& a) {
  const double l = std::sqrt(dot(a, a));
  return {a[0] / l, a[1] / l, a[2] / l};
}

}  // namespace

RotationSystem rotation_from_coordinates(const Graph& g,
                                         const std::vector<std::array<double, 3>>& p) {
  const int n = g.n();
  if (int(p.size()) != n) fail(Errc::ParameterOutOfRange, "coordinate count mismatch");
  Vec3 c{0, 0, 0};
  for (const auto& q : p)
    for (int i = 0; i < 3; ++i) c[size_t(i)] += q[size_t(i)] / n;
  RotationSystem rot;
  rot.order.assign(size_t(n), {});
  for (int v = 0; v < n; ++v) {
    const Vec3 nrm = unit(sub(p[size_t(v)], c));
    const Vec3 ref = std::abs(nrm[2]) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 e1 = unit(cross(nrm, ref));
    const Vec3 e2 = cross(nrm, e1);
    std::vector<std::pair<double, int>> ang;
    g.row(v).for_each([&](int w) {
      const Vec3 d = sub(p[size_t(w)], p[size_t(v)]);
      ang.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
    });
    std::sort(ang.begin(), ang.end());
    for (auto [a, w] : ang) rot.order[size_t(v)].push_back(w);
  }
  return rot;
}

CatalogEntry build_family(const std::string& kind, int m) {
  if (m < 3 || 2 * m > kMaxVertices) fail(Errc::ParameterOutOfRange, "ring size " + std::to_string(m));
  const bool prism = (kind == "prism");
  if (!prism && kind != "antiprism") fail(Errc::ParameterOutOfRange, "unknown family " + kind);
  const int n = 2 * m;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);          // top ring
    edges.emplace_back(m + i, m + (i + 1) % m);  // bottom ring
    edges.emplace_back(i, m + i);
    // antiprism: the offset bottom ring sits at angles (i +/- 1/2) steps, so
    // vertex i also joins the bottom vertex one step behind
    if (!prism) edges.emplace_back(i, m + (i + m - 1) % m);
  }
  Graph g = Graph::build(n, edges);
  const double off = prism ? 0.0 : M_PI / m;
  std::vector<std::array<double, 3>> p(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i) {
    const double a = 2 * M_PI * i / m;
    p[size_t(i)] = {std::cos(a), std::sin(a), 0.8};
    p[size_t(m + i)] = {std::cos(a + off), std::sin(a + off), -0.8};
  }
  CatalogEntry e;
  e.name = kind + "-" + std::to_string(m);
  e.graph = std::move(g);
  e.rotation = rotation_from_coordinates(e.graph, p);
  e.expected_symbol = prism ? normalize_symbol({4, 4, m}) : normalize_symbol({3, 3, 3, m});
  e.expected_walk_regular = true;
  e.family_parameter = m;
  return e;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << (name.empty() ? "g" : name) << " {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cospec
