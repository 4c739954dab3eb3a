#include "cospec/report.hpp"

#include <sstream>

#include "cospec/symmetry.hpp"
#include "cospec/walk.hpp"

namespace cospec {

using nlohmann::json;

namespace {

json envelope(const std::string& kind, json result) {
  json j;
  j["schema"] = "cospec-report-v1";
  j["kind"] = kind;
  j["result"] = std::move(result);
  return j;
}

json blocks_json(const std::vector<std::vector<int>>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

json hit_json(const CensusHit& h) {
  json j;
  j["n"] = h.n;
  j["degree"] = h.degree;
  j["graph6"] = h.canonical_g6;
  j["orbit_count"] = h.orbit_count;
  j["cospectral_block_sizes"] = h.cospectral_block_sizes;
  if (h.witness_pair)
    j["witness_pair"] = {h.witness_pair->first, h.witness_pair->second};
  else
    j["witness_pair"] = nullptr;
  j["connected"] = h.connected;
  j["tree"] = h.tree;
  return j;
}

}  // namespace

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["loops"] = g.loop_vertices();
  return j;
}

json check_report(const Graph& g) {
  json r;
  r["graph"] = graph_json(g);
  r["degree_sequence"] = g.degree_sequence();
  r["connected"] = is_connected(g);
  r["cospectral_blocks"] = blocks_json(cospectral_partition(g).blocks);
  const auto irr = first_walk_irregularity(g);
  r["walk_regular"] = !irr.has_value();
  r["first_walk_irregularity"] = irr ? json(*irr) : json(nullptr);
  if (!g.has_loops()) {
    const auto sym = symmetry_analysis(g);
    r["orbits"] = blocks_json(sym.orbits.blocks);
    r["vertex_transitive"] = sym.orbits.blocks.size() == 1;
    r["canonical_graph6"] = sym.canonical.g6;
  } else {
    r["orbits"] = blocks_json(automorphism_orbits(g).blocks);
    r["vertex_transitive"] = automorphism_orbits(g).blocks.size() == 1;
    r["canonical_graph6"] = nullptr;
  }
  if (g.n() <= 32) {
    WalkProfile p(g);
    json profile = json::array();
    for (int v = 0; v < g.n(); ++v) {
      json row = json::array();
      for (int k = 0; k < g.n(); ++k) row.push_back(p.counts(v, k).get_str());
      profile.push_back(std::move(row));
    }
    r["walk_profile"] = std::move(profile);
  }
  return envelope("check", std::move(r));
}

std::string check_text(const Graph& g) {
  std::ostringstream os;
  os << "graph: n=" << g.n() << " e=" << g.edge_count();
  if (g.has_loops()) os << " loops=" << g.loop_vertices().size();
  os << "\n";
  os << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
  const auto cos = cospectral_partition(g);
  os << "cospectral blocks:";
  for (const auto& b : cos.blocks) {
    os << " {";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << "}";
  }
  os << "\n";
  const auto orbits = g.has_loops() ? automorphism_orbits(g) : symmetry_analysis(g).orbits;
  os << "orbits:";
  for (const auto& b : orbits.blocks) {
    os << " {";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << "}";
  }
  os << "\n";
  const auto irr = first_walk_irregularity(g);
  if (irr)
    os << "walk-regular: no (first differs at k=" << *irr << ")\n";
  else
    os << "walk-regular: yes\n";
  if (!g.has_loops()) os << "canonical: " << symmetry_analysis(g).canonical.g6 << "\n";
  return os.str();
}

json search_report_json(const SearchReport& r) {
  json j;
  j["search"] = r.kind;
  j["n_max"] = r.n_max;
  j["regular_only"] = r.regular_only;
  json slices = json::array();
  for (const auto& s : r.slices) {
    json sj;
    sj["n"] = s.n;
    sj["degree"] = s.degree;
    sj["total_graphs"] = std::to_string(s.total_graphs);
    sj["hit_count"] = std::to_string(s.hit_count);
    slices.push_back(std::move(sj));
  }
  j["slices"] = std::move(slices);
  json hits = json::array();
  for (const auto& h : r.hits) hits.push_back(hit_json(h));
  j["hits"] = std::move(hits);
  return envelope("search", std::move(j));
}

std::string search_report_text(const SearchReport& r) {
  std::ostringstream os;
  os << "search: " << r.kind << " n<=" << r.n_max << (r.regular_only ? " (regular)" : "") << "\n";
  for (const auto& s : r.slices) {
    os << "  n=" << s.n;
    if (s.degree >= 0) os << " d=" << s.degree;
    os << ": " << s.total_graphs << " classes, " << s.hit_count << " hits\n";
  }
  os << "total hits: " << r.hits.size() << "\n";
  for (const auto& h : r.hits) {
    os << "  " << h.canonical_g6 << "  n=" << h.n;
    if (h.degree >= 0) os << " d=" << h.degree;
    os << " orbits=" << h.orbit_count;
    if (h.witness_pair)
      os << " pair=(" << h.witness_pair->first << "," << h.witness_pair->second << ")";
    os << (h.connected ? "" : " disconnected") << (h.tree ? " tree" : "") << "\n";
  }
  os << "elapsed: " << r.seconds << "s\n";
  return os.str();
}

json catalog_report_json(const CatalogReport& r) {
  json j;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["failures"] = c.failures;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = r.all_passed;
  return envelope("catalog", std::move(j));
}

std::string catalog_report_text(const CatalogReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.passed ? "ok   " : "FAIL ") << c.name;
    for (const auto& f : c.failures) os << " [" << f << "]";
    os << "\n";
  }
  os << (r.all_passed ? "catalog audit passed" : "catalog audit FAILED") << "\n";
  return os.str();
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cospec
