#include <doctest.h>

#include <random>

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

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
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

const Graph kPetersen = Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});

}  // namespace

TEST_CASE("walk profile on hand-counted graphs") {
  // C5: every vertex row (1, 0, 2, 0, 6)
  WalkProfile c5(cycle(5));
  for (int v = 0; v < 5; ++v) {
    CHECK(c5.counts(v, 0) == 1);
    CHECK(c5.counts(v, 1) == 0);
    CHECK(c5.counts(v, 2) == 2);
    CHECK(c5.counts(v, 3) == 0);
    CHECK(c5.counts(v, 4) == 6);
  }
  // K4: eigenvalues {3, -1^3} give diag(A^4) = (81 + 3)/4 = 21
  WalkProfile k4(complete(4));
  for (int v = 0; v < 4; ++v) {
    CHECK(k4.counts(v, 2) == 3);
    CHECK(k4.counts(v, 3) == 6);
  }
  // P5, k = 4: middle entries witness the sharpness bound
  WalkProfile p5(path(5));
  CHECK(p5.counts(1, 3) == 0);
  CHECK(p5.counts(1, 4) == 5);
  CHECK(p5.counts(2, 4) == 6);
}

TEST_CASE("walk profile matches explicit walk enumeration with loops") {
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + int(rng() % 5);
    std::bernoulli_distribution coin(0.4);
    std::vector<std::pair<int, int>> e;
    std::vector<int> loops;
    for (int u = 0; u < n; ++u) {
      if (coin(rng)) loops.push_back(u);
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    }
    const Graph g = Graph::build(n, e, loops);
    WalkProfile p(g);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < n; ++k)
        CHECK(p.counts(v, k) == mpz_class(long(oracle::closed_walks(g, v, k))));
  }
}

TEST_CASE("walk_diagonal agrees with dense matrix powers") {
  std::mt19937 rng(9);
  for (int it = 0; it < 10; ++it) {
    const Graph g = random_graph(6 + int(rng() % 4), 0.5, rng);
    for (int k : {0, 1, 5, 12}) {
      const auto got = walk_diagonal(g, k);
      const auto want = oracle::power_diag(g, k);
      for (int v = 0; v < g.n(); ++v) CHECK(got[size_t(v)] == want[size_t(v)]);
    }
  }
}

TEST_CASE("bignum path is exercised and consistent") {
  // K20 at k = 19: 19 * log2(19) ~ 81 bits, beyond the u64 fast path.
  const Graph g = complete(20);
  WalkProfile p(g);
  const auto diag = walk_diagonal(g, 19);
  CHECK(p.counts(0, 19) == diag[0]);
  CHECK(diag[0] > mpz_class("18446744073709551615"));  // > 2^64 - 1
  const auto want = oracle::power_diag(g, 19);
  CHECK(diag[0] == want[0]);
}

TEST_CASE("cospectrality basics") {
  const Graph p5 = path(5);
  CHECK(are_cospectral(p5, 0, 4));
  CHECK(!are_cospectral(p5, 1, 2));
  WalkProfile p(p5);
  CHECK(p.first_difference(1, 2) == 4);  // k = n - 1

  const Graph lp4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {3});
  WalkProfile q(lp4);
  CHECK(q.first_difference(1, 2) == 3);
  CHECK(q.rows_equal(1, 1));

  const auto part = cospectral_partition(p5);
  CHECK(part.blocks == std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2}});
}

TEST_CASE("walk-regularity") {
  CHECK(is_walk_regular(cycle(6)));
  CHECK(is_walk_regular(complete(5)));
  CHECK(is_walk_regular(kPetersen));
  CHECK(!is_walk_regular(path(4)));
  CHECK(first_walk_irregularity(path(4)) == 2);  // degrees differ -> diag(A^2)
  // regular but not walk-regular: prism with a twist? use K4 minus edge + ...
  // 3-regular non-vertex-transitive example: the smallest is n = 6 prism vs
  // K_{3,3}; both ARE walk-regular, so use a degree-based negative instead.
  const Graph near = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(first_walk_irregularity(near).has_value());
}

TEST_CASE("sharpness family agrees through n-2 and differs at n-1") {
  for (int n = 3; n <= 11; ++n) {
    const auto inst = sharpness_instance(n);
    WalkProfile p(inst.graph);
    for (int k = 0; k <= n - 2; ++k) CHECK(p.counts(inst.a, k) == p.counts(inst.b, k));
    CHECK(p.counts(inst.a, n - 1) < p.counts(inst.b, n - 1));
  }
}

TEST_CASE("cycle census on knowns") {
  const auto c6 = cycle_census(cycle(6), 10);
  CHECK(c6.girth == 6);
  CHECK(!c6.second_length.has_value());
  CHECK(c6.total(6) == 1);
  CHECK(c6.count(3, 6) == 1);
  CHECK(c6.total(3) == 0);

  const auto k4 = cycle_census(complete(4), 4);
  CHECK(k4.total(3) == 4);
  CHECK(k4.total(4) == 3);
  CHECK(k4.count(0, 3) == 3);
  CHECK(k4.girth == 3);
  CHECK(k4.second_length == 4);

  const auto pet = cycle_census(kPetersen, 10);
  CHECK(pet.girth == 5);
  CHECK(pet.second_length == 6);
  CHECK(pet.total(5) == 12);
  CHECK(pet.total(6) == 10);
  CHECK(pet.constant(5));

  CHECK(cycles_through(complete(4), 0, 3) == 3);
  CHECK_THROWS_AS(cycle_census(cycle(4), 2), Error);
}

TEST_CASE("handshake: per-vertex cycle counts sum to m * total") {
  std::mt19937 rng(13);
  for (int it = 0; it < 15; ++it) {
    const Graph g = random_graph(7, 0.5, rng);
    const auto c = cycle_census(g, 7);
    for (int m = 3; m <= 7; ++m) {
      long long s = 0;
      for (int v = 0; v < g.n(); ++v) s += c.count(v, m);
      CHECK(s == m * c.total(m));
    }
  }
}

TEST_CASE("chordless vs raw cycles via for_each_cycle") {
  long long cnt = 0;
  for_each_cycle(complete(5), 5, [&](const std::vector<int>& cyc) { cnt += cyc.size() == 4; });
  CHECK(cnt == cycle_census(complete(5), 5).total(4));
}

TEST_CASE("predicted diagonals hold where the hypotheses do") {
  for (const Graph& g : {cycle(5), cycle(6), complete(4), kPetersen}) {
    const auto census = cycle_census(g, 10);
    for (int k = 3; k <= 6; ++k) {
      const auto diag = walk_diagonal(g, k);
      for (int v = 0; v < g.n(); ++v) {
        mpz_class want;
        try {
          want = predicted_diagonal(g, census, v, k);
        } catch (const Error& e) {
          CHECK(e.code() == Errc::HypothesisUnmet);
          continue;
        }
        CHECK(diag[size_t(v)] == want);
      }
    }
  }
}

TEST_CASE("predicted diagonal rejects bad inputs") {
  const Graph g = path(4);  // irregular
  const auto census = cycle_census(g, 6);
  CHECK_THROWS_AS(predicted_diagonal(g, cycle_census(g, 4), 0, 6), Error);
  CHECK_THROWS_AS(predicted_diagonal(g, census, 0, 4), Error);
  CHECK_THROWS_AS(predicted_diagonal(g, census, 0, 7), Error);
  const Graph lp = Graph::build(3, {{0, 1}, {1, 2}}, {0});
  CHECK_THROWS_AS(predicted_diagonal(lp, cycle_census(lp, 3), 0, 3), Error);
}
