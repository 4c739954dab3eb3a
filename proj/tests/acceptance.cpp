// Acceptance gate: one line per criterion, PASS/FAIL, non-zero exit when
// anything fails. Heavy censuses run on all available cores.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "cospec/enumerate.hpp"
#include "cospec/planar.hpp"
#include "cospec/symmetry.hpp"
#include "cospec/walk.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++g_failures;
  std::printf("%s  criterion %d: %s  [%.1fs]%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              secs, note.c_str());
  std::fflush(stdout);
}

EnumOptions all_cores() {
  return EnumOptions{int(std::max(1u, std::thread::hardware_concurrency())), -1};
}

bool census_small_graphs() {
  const auto r = census_non_similar_cospectral(8, false, all_cores());
  long long n7 = -1, n8 = -1, hits_below = 0, hits8 = 0;
  for (const auto& s : r.slices) {
    if (s.n == 7) n7 = s.total_graphs;
    if (s.n == 8) {
      n8 = s.total_graphs;
      hits8 = s.hit_count;
    } else {
      hits_below += s.hit_count;
    }
  }
  bool ok = n7 == 1044 && n8 == 12346 && hits_below == 0 && hits8 == 126;
  for (const auto& h : r.hits) ok = ok && h.connected && !h.tree;
  return ok;
}

bool census_regular_graphs() {
  const auto r = census_non_similar_cospectral(10, true, all_cores());
  const long long want_totals[] = {21, 60, 60, 21};
  const long long want_hits[] = {3, 22, 22, 3};
  bool ok = true;
  for (const auto& s : r.slices) {
    if (s.n <= 9) ok = ok && s.hit_count == 0;
    if (s.n == 10 && s.degree >= 3 && s.degree <= 6) {
      ok = ok && s.total_graphs == want_totals[s.degree - 3];
      ok = ok && s.hit_count == want_hits[s.degree - 3];
    }
  }
  return ok;
}

std::vector<CensusHit> g_wr12_hits;  // shared with the planarity criterion

bool census_walk_regular() {
  const auto r = census_walk_regular_non_vt(12, all_cores());
  long long below = 0;
  std::set<int> degrees;
  for (const auto& s : r.slices)
    if (s.n <= 11) below += s.hit_count;
  for (const auto& h : r.hits)
    if (h.n == 12) {
      degrees.insert(h.degree);
      g_wr12_hits.push_back(h);
    }
  bool ok = below == 0 && g_wr12_hits.size() == 4 && degrees == std::set<int>{4, 5, 6, 7};
  // the degree-d and degree-(11-d) witnesses must be edge complements
  int pairs = 0;
  for (const auto& a : g_wr12_hits)
    for (const auto& b : g_wr12_hits)
      if (a.degree < b.degree && a.degree + b.degree == 11 &&
          canonical_form(complement(parse_graph6(a.canonical_g6))).g6 == b.canonical_g6)
        ++pairs;
  return ok && pairs == 2;
}

bool sharpness() {
  for (int n = 3; n <= 11; ++n) {
    const auto inst = sharpness_instance(n);
    WalkProfile p(inst.graph);
    for (int k = 0; k <= n - 2; ++k)
      if (p.counts(inst.a, k) != p.counts(inst.b, k)) return false;
    if (!(p.counts(inst.a, n - 1) < p.counts(inst.b, n - 1))) return false;
  }
  return true;
}

bool formula_suite() {
  long long checked = 0;
  for (int n = 3; n <= 10; ++n)
    for (int d = 2; d < n; ++d) {
      if ((n * d) % 2) continue;
      Constraints c;
      c.n = n;
      c.regular_degree = d;
      c.connected_only = true;
      bool bad = false;
      enumerate_graphs(c, [&](const Graph& g) {
        const auto census = cycle_census(g, 10);
        for (int k = 3; k <= 6; ++k) {
          const auto diag = walk_diagonal(g, k);
          for (int v = 0; v < g.n(); ++v) {
            mpz_class want;
            try {
              want = predicted_diagonal(g, census, v, k);
            } catch (const Error& e) {
              if (e.code() == Errc::HypothesisUnmet) continue;
              throw;
            }
            ++checked;
            if (diag[size_t(v)] != want) bad = true;
          }
        }
      });
      if (bad) return false;
    }
  return checked > 0;
}

bool catalog_audit() {
  const auto report = verify_theorem3();
  if (!report.all_passed) {
    for (const auto& c : report.checks)
      if (!c.passed) {
        std::printf("      audit failure: %s", c.name.c_str());
        for (const auto& f : c.failures) std::printf(" [%s]", f.c_str());
        std::printf("\n");
      }
  }
  return report.all_passed;
}

bool case_constants() {
  struct Case {
    const char* name;
    int k;
    long base;
    bool add_cycles;
  };
  const Case cases[] = {
      {"truncated-cube", 8, 591, true},
      {"truncated-dodecahedron", 10, 4223, true},
      {"truncated-cuboctahedron", 8, 809 + 2, false},
      {"truncated-icosidodecahedron", 10, 6063 + 2, false},
  };
  for (const auto& c : cases) {
    const auto entry = load_catalog_entry(c.name);
    const auto diag = walk_diagonal(entry.graph, c.k);
    if (c.add_cycles) {
      const auto census = cycle_census(entry.graph, c.k);
      for (int v = 0; v < entry.graph.n(); ++v)
        if (diag[size_t(v)] != mpz_class(c.base) + 2 * mpz_class(long(census.count(v, c.k))))
          return false;
    } else {
      for (int v = 0; v < entry.graph.n(); ++v)
        if (diag[size_t(v)] != c.base) return false;
    }
  }
  return true;
}

bool non_planarity() {
  if (g_wr12_hits.size() != 4) return false;  // needs criterion 3's scan
  for (const auto& h : g_wr12_hits)
    if (is_planar(parse_graph6(h.canonical_g6))) return false;
  // shipped toroidal rotation for the degree-4 witness
  std::ifstream in(data_dir() + "/witnesses/torus_rotation.json");
  if (!in) return false;
  nlohmann::json j;
  in >> j;
  const Graph g = parse_graph6(j.at("graph6").get<std::string>());
  RotationSystem rot;
  rot.order = j.at("rotation").get<std::vector<std::vector<int>>>();
  bool found = false;
  for (const auto& h : g_wr12_hits)
    if (h.degree == 4) found = canonical_form(g).g6 == h.canonical_g6;
  const auto er = verify_embedding(g, rot);
  return found && er.euler_characteristic == 0;
}

bool property_suites() {
  // orbit partition refines cospectral partition, all graphs n <= 8
  for (int n = 2; n <= 8; ++n) {
    Constraints c;
    c.n = n;
    bool bad = false;
    enumerate_graphs(c, [&](const Graph& g) {
      WalkProfile p(g);
      const auto orbits = symmetry_analysis(g).orbits;
      for (const auto& b : orbits.blocks)
        for (size_t i = 1; i < b.size(); ++i)
          if (!p.rows_equal(b[0], b[size_t(i)])) bad = true;
    });
    if (bad) return false;
  }
  // orbits match brute force, all graphs n <= 7
  for (int n = 2; n <= 7; ++n) {
    Constraints c;
    c.n = n;
    bool bad = false;
    enumerate_graphs(c, [&](const Graph& g) {
      if (automorphism_orbits(g).blocks != brute_force_orbits(g).blocks) bad = true;
    });
    if (bad) return false;
  }
  // Complement preservation. The underlying eigenfunction argument runs
  // through the Laplacian, so the statement that holds for every connected
  // graph with connected complement is the Laplacian one; the adjacency
  // version follows for regular graphs (L = dI - A) and is false in general
  // (first counterexample at n = 8: G?ABFo, vertices 0 and 6).
  for (int n = 2; n <= 8; ++n) {
    Constraints c;
    c.n = n;
    c.connected_only = true;
    bool bad = false;
    enumerate_graphs(c, [&](const Graph& g) {
      const Graph h = complement(g);
      if (!is_connected(h)) return;
      const auto lg = oracle::laplacian_profile(g);
      const auto lh = oracle::laplacian_profile(h);
      const auto degs = g.degree_sequence();
      const bool regular = degs.front() == degs.back();
      WalkProfile pg(g), ph(h);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if ((lg[size_t(a)] == lg[size_t(b)]) != (lh[size_t(a)] == lh[size_t(b)])) bad = true;
          if (regular && pg.rows_equal(a, b) != ph.rows_equal(a, b)) bad = true;
        }
    });
    if (bad) return false;
  }
  // canonical-form invariance: 100 random relabelings per pinned witness
  std::mt19937 rng(2024);
  std::vector<std::string> witnesses;
  for (const auto& h : g_wr12_hits) witnesses.push_back(h.canonical_g6);
  const auto small = census_non_similar_cospectral(8, false, all_cores());
  for (const auto& h : small.hits) witnesses.push_back(h.canonical_g6);
  for (const auto& w : witnesses) {
    const Graph g = parse_graph6(w);
    std::vector<int> perm(size_t(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 100; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (canonical_form(g.relabeled(perm)).g6 != w) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "smallest graphs with cospectral non-similar vertices", census_small_graphs);
  criterion(2, "regular census at n = 10", census_regular_graphs);
  criterion(3, "walk-regular non-vertex-transitive census at n = 12", census_walk_regular);
  criterion(4, "sharpness of the n-1 walk bound", sharpness);
  criterion(5, "closed-walk formulas for k = 3..6", formula_suite);
  criterion(6, "polyhedron catalog audit", catalog_audit);
  criterion(7, "case-specific diagonal constants", case_constants);
  criterion(8, "non-planarity and toroidal embedding of the n = 12 witnesses", non_planarity);
  criterion(9, "property suites against oracles", property_suites);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
