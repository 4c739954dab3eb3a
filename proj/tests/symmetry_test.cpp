#include <doctest.h>

#include <random>
#include <set>

#include "cospec/symmetry.hpp"
#include "cospec/walk.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("equitable refinement basics") {
  // path: degree classes split ends from middles, then distance refines
  const Coloring c = equitable_refinement(path(4), Coloring(4, 0));
  CHECK(c[0] == c[3]);
  CHECK(c[1] == c[2]);
  CHECK(c[0] != c[1]);
  // a cycle stays monochrome
  const Coloring u = equitable_refinement(cycle(6), Coloring(6, 0));
  CHECK(u == Coloring(6, 0));
  // refinement respects (never merges) the initial coloring
  Coloring init{0, 1, 1, 0};
  const Coloring r = equitable_refinement(cycle(4), init);
  CHECK(r[0] != r[1]);
}

TEST_CASE("orbits on knowns") {
  const auto p = automorphism_orbits(path(5));
  CHECK(p.blocks == std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2}});
  CHECK(p.same_block(0, 4));
  CHECK(!p.same_block(1, 2));

  CHECK(is_vertex_transitive(cycle(7)));
  CHECK(!is_vertex_transitive(path(3)));

  CHECK(are_similar(path(5), 1, 3));
  CHECK(!are_similar(path(5), 1, 2));
}

TEST_CASE("orbits with loops use the brute-force fallback") {
  const Graph lp = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {3});
  const auto o = automorphism_orbits(lp);
  // the loop breaks the reflection; all orbits singletons
  CHECK(o.blocks.size() == 4);
}

TEST_CASE("orbits match n!-brute-force exhaustively for n <= 5") {
  for (int n = 2; n <= 5; ++n)
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      CHECK(automorphism_orbits(g).blocks == brute_force_orbits(g).blocks);
    });
}

TEST_CASE("orbits match n!-brute-force on random graphs n = 6..8") {
  std::mt19937 rng(101);
  for (int it = 0; it < 150; ++it) {
    const int n = 6 + int(rng() % 3);
    const Graph g = random_graph(n, 0.2 + 0.1 * double(rng() % 5), rng);
    CHECK(automorphism_orbits(g).blocks == brute_force_orbits(g).blocks);
  }
}

TEST_CASE("canonical form is relabeling-invariant") {
  std::mt19937 rng(77);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + int(rng() % 9);
    const Graph g = random_graph(n, 0.4, rng);
    const auto canon = canonical_form(g);
    // the relabeling really produces the canonical graph
    CHECK(to_graph6(g.relabeled(canon.relabeling)) == canon.g6);
    for (int rep = 0; rep < 5; ++rep) {
      const auto perm = oracle::random_permutation(n, rng);
      CHECK(canonical_form(g.relabeled(perm)).g6 == canon.g6);
    }
  }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
  // all 11 isomorphism classes on 4 vertices have distinct canonical forms
  std::set<std::string> canon;
  long long labeled = 0;
  oracle::for_each_labeled_graph(4, [&](const Graph& g) {
    canon.insert(canonical_form(g).g6);
    ++labeled;
  });
  CHECK(labeled == 64);
  CHECK(canon.size() == 11);
}

TEST_CASE("generators returned are genuine automorphisms") {
  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_graph(7, 0.5, rng);
    const auto sym = symmetry_analysis(g);
    for (const auto& gen : sym.generators) CHECK(is_automorphism(g, gen));
  }
}

TEST_CASE("degenerate graphs") {
  const Graph k1 = Graph::build(1, {});
  CHECK(automorphism_orbits(k1).blocks.size() == 1);
  CHECK(canonical_form(k1).g6 == "@");
  const Graph e3 = Graph::build(3, {});
  CHECK(is_vertex_transitive(e3));
  const auto sym = symmetry_analysis(e3);
  CHECK(sym.orbits.blocks.size() == 1);
}

TEST_CASE("orbit partition refines the cospectral partition") {
  std::mt19937 rng(41);
  for (int it = 0; it < 60; ++it) {
    const Graph g = random_graph(8, 0.45, rng);
    const auto orbits = automorphism_orbits(g);
    WalkProfile p(g);
    for (const auto& block : orbits.blocks)
      for (size_t i = 1; i < block.size(); ++i)
        CHECK(p.rows_equal(block[0], block[size_t(i)]));
  }
}

TEST_CASE("symmetry analysis rejects loops") {
  CHECK_THROWS_AS(symmetry_analysis(Graph::build(2, {{0, 1}}, {0})), Error);
}
