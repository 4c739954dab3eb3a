#include <doctest.h>

#include "cospec/report.hpp"
#include "cospec/walk.hpp"

using namespace cospec;
using nlohmann::json;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("graph json round structure") {
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {2});
  const json j = graph_json(g);
  CHECK(j["n"] == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["loops"] == json::array({2}));
}

TEST_CASE("check report on K4") {
  const json j = check_report(complete(4));
  CHECK(j["schema"] == "cospec-report-v1");
  CHECK(j["kind"] == "check");
  const auto& r = j["result"];
  CHECK(r["walk_regular"] == true);
  CHECK(r["vertex_transitive"] == true);
  CHECK(r["cospectral_blocks"].size() == 1);
  CHECK(r["orbits"].size() == 1);
  // profile entries are decimal strings
  CHECK(r["walk_profile"][0][3] == "6");
  CHECK(check_text(complete(4)).find("walk-regular: yes") != std::string::npos);
}

TEST_CASE("reports are byte-stable") {
  const Graph g = complete(5);
  CHECK(dump_report(check_report(g)) == dump_report(check_report(g)));
}

TEST_CASE("search report serialization carries counts as strings") {
  SearchReport r;
  r.kind = "demo";
  r.n_max = 8;
  r.slices.push_back({8, -1, 12346, 126});
  CensusHit h;
  h.n = 8;
  h.canonical_g6 = "G?";
  h.witness_pair = {0, 1};
  r.hits.push_back(h);
  const json j = search_report_json(r);
  CHECK(j["result"]["slices"][0]["total_graphs"] == "12346");
  CHECK(j["result"]["hits"][0]["witness_pair"] == json::array({0, 1}));
  const std::string text = search_report_text(r);
  CHECK(text.find("12346") != std::string::npos);
  CHECK(text.find("126") != std::string::npos);
}

TEST_CASE("catalog report serialization") {
  CatalogReport r;
  r.checks.push_back({"cube", true, {}});
  r.checks.push_back({"broken", false, {"not-spherical"}});
  r.all_passed = false;
  const json j = catalog_report_json(r);
  CHECK(j["result"]["all_passed"] == false);
  CHECK(j["result"]["checks"][1]["failures"][0] == "not-spherical");
  const std::string text = catalog_report_text(r);
  CHECK(text.find("FAIL broken") != std::string::npos);
  CHECK(text.find("cube") != std::string::npos);
}
