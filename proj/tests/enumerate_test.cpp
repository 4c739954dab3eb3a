#include <doctest.h>

#include <map>
#include <set>

#include "cospec/enumerate.hpp"
#include "cospec/symmetry.hpp"
#include "cospec/walk.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

// Burnside-free oracle: count isomorphism classes by canonicalizing every
// labeled graph (n small).
long long classes_by_canonicalization(int n, bool connected_only = false) {
  std::set<std::string> seen;
  oracle::for_each_labeled_graph(n, [&](const Graph& g) {
    if (connected_only && !is_connected(g)) return;
    seen.insert(canonical_form(g).g6);
  });
  return (long long)seen.size();
}

}  // namespace

TEST_CASE("class counts match labeled brute force for n <= 5") {
  // known: 1, 2, 4, 11, 34 isomorphism classes on 1..5 vertices
  const long long known[] = {1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    Constraints c;
    c.n = n;
    long long cnt = enumerate_graphs(c, [](const Graph&) {});
    CHECK(cnt == known[n - 1]);
    CHECK(cnt == classes_by_canonicalization(n));
  }
}

TEST_CASE("connected class counts for n <= 5") {
  const long long known[] = {1, 1, 2, 6, 21};
  for (int n = 1; n <= 5; ++n) {
    Constraints c;
    c.n = n;
    c.connected_only = true;
    CHECK(enumerate_graphs(c, [](const Graph&) {}) == known[n - 1]);
  }
}

TEST_CASE("enumeration emits pairwise non-isomorphic graphs of the right size") {
  Constraints c;
  c.n = 6;
  std::set<std::string> canon;
  long long cnt = enumerate_graphs(c, [&](const Graph& g) {
    CHECK(g.n() == 6);
    canon.insert(canonical_form(g).g6);
  });
  CHECK(cnt == 156);  // classes on 6 vertices
  CHECK((long long)canon.size() == cnt);
}

TEST_CASE("regular enumeration matches known counts") {
  // cubic graphs including disconnected ones: n=4:1, n=6:2, n=8:6, n=10:21
  const std::map<int, long long> cubic{{4, 1}, {6, 2}, {8, 6}, {10, 21}};
  for (auto [n, want] : cubic) {
    Constraints c;
    c.n = n;
    c.regular_degree = 3;
    std::set<std::string> canon;
    long long cnt = enumerate_graphs(c, [&](const Graph& g) {
      for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
      canon.insert(canonical_form(g).g6);
    });
    CHECK(cnt == want);
    CHECK((long long)canon.size() == cnt);
  }
  // 2-regular on 9 vertices: partitions of 9 into parts >= 3
  // ({9}, {6,3}, {5,4}, {3,3,3}) -> 4 classes
  Constraints c;
  c.n = 9;
  c.regular_degree = 2;
  CHECK(enumerate_graphs(c, [](const Graph&) {}) == 4);
  // 0-regular and infeasible degrees
  Constraints z;
  z.n = 5;
  z.regular_degree = 0;
  CHECK(enumerate_graphs(z, [](const Graph&) {}) == 1);
  z.regular_degree = 3;  // odd sum
  CHECK(enumerate_graphs(z, [](const Graph&) {}) == 0);
}

TEST_CASE("max_edges constraint") {
  Constraints c;
  c.n = 5;
  c.max_edges = 4;
  long long cnt = enumerate_graphs(c, [&](const Graph& g) { CHECK(g.edge_count() <= 4); });
  CHECK(cnt > 0);
  CHECK(cnt < 34);
}

TEST_CASE("scan_graphs is deterministic across worker counts") {
  Constraints c;
  c.n = 7;
  auto classify = [](const Graph& g) -> std::optional<CensusHit> {
    const auto part = cospectral_partition(g);
    for (const auto& b : part.blocks)
      if (b.size() > 1) {
        CensusHit h;
        h.n = g.n();
        h.canonical_g6 = canonical_form(g).g6;
        return h;
      }
    return std::nullopt;
  };
  const auto seq = scan_graphs(c, EnumOptions{1, -1}, classify);
  const auto par = scan_graphs(c, EnumOptions{8, -1}, classify);
  CHECK(seq.total_graphs == 1044);
  CHECK(par.total_graphs == 1044);
  REQUIRE(seq.hits.size() == par.hits.size());
  for (size_t i = 0; i < seq.hits.size(); ++i)
    CHECK(seq.hits[i].canonical_g6 == par.hits[i].canonical_g6);
}

TEST_CASE("node budget aborts the scan") {
  Constraints c;
  c.n = 8;
  bool threw = false;
  try {
    scan_graphs(c, EnumOptions{2, 50}, [](const Graph&) { return std::nullopt; });
  } catch (const Error& e) {
    threw = e.code() == Errc::BudgetExceeded;
  }
  CHECK(threw);
}

TEST_CASE("constraint validation") {
  Constraints c;
  c.n = 0;
  CHECK_THROWS_AS(enumerate_graphs(c, [](const Graph&) {}), Error);
  c.n = 13;
  CHECK_THROWS_AS(enumerate_graphs(c, [](const Graph&) {}), Error);
  c.n = 5;
  c.regular_degree = 5;
  CHECK_THROWS_AS(enumerate_graphs(c, [](const Graph&) {}), Error);
}

TEST_CASE("complement preserves Laplacian-cospectral pairs (connected, co-connected)") {
  long long checked = 0;
  oracle::for_each_labeled_graph(6, [&](const Graph& g) {
    const Graph h = complement(g);
    if (!is_connected(g) || !is_connected(h)) return;
    const auto lg = oracle::laplacian_profile(g);
    const auto lh = oracle::laplacian_profile(h);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        CHECK((lg[size_t(a)] == lg[size_t(b)]) == (lh[size_t(a)] == lh[size_t(b)]));
        ++checked;
      }
  });
  CHECK(checked > 0);
}

TEST_CASE("adjacency cospectrality is not preserved under complement in general") {
  // irregular witness: vertices 0 and 6 share a walk profile, but their
  // profiles split in the complement (the Laplacian ones do not)
  const Graph g = parse_graph6("G?ABFo");
  const Graph h = complement(g);
  REQUIRE(is_connected(g));
  REQUIRE(is_connected(h));
  WalkProfile pg(g), ph(h);
  CHECK(pg.rows_equal(0, 6));
  CHECK_FALSE(ph.rows_equal(0, 6));
  const auto lg = oracle::laplacian_profile(g);
  const auto lh = oracle::laplacian_profile(h);
  CHECK_FALSE(lg[0] == lg[6]);
  CHECK_FALSE(lh[0] == lh[6]);
}
