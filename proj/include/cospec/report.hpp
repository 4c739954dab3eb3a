#pragma once

#include <json.hpp>

#include <string>

#include "cospec/enumerate.hpp"
#include "cospec/graph.hpp"
#include "cospec/planar.hpp"

namespace cospec {

/// JSON report envelopes. Potentially large counts are carried as decimal
/// strings so downstream tooling never hits 53-bit truncation; object keys
/// are sorted, so identical inputs yield byte-identical documents. Timings
/// never enter the JSON (they go to the text channel) for the same reason.

nlohmann::json graph_json(const Graph& g);

/// Full single-graph analysis: degrees, cospectral blocks, orbits,
/// walk-regularity, canonical form.
nlohmann::json check_report(const Graph& g);
std::string check_text(const Graph& g);

nlohmann::json search_report_json(const SearchReport& r);
std::string search_report_text(const SearchReport& r);

nlohmann::json catalog_report_json(const CatalogReport& r);
std::string catalog_report_text(const CatalogReport& r);

std::string dump_report(const nlohmann::json& j);

}  // namespace cospec
