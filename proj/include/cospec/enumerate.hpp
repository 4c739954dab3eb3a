#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

struct Constraints {
  int n = 1;
  std::optional<int> regular_degree;  // exact degree of every vertex
  bool connected_only = false;
  std::optional<int> max_edges;
};

struct EnumOptions {
  int workers = 1;
  long long node_budget = -1;  // children examined; -1 = unlimited
};

/// Isomorph-free exhaustive generation by canonical vertex augmentation.
/// Visits one representative per isomorphism class, in a deterministic
/// order; returns the class count. Sequential.
long long enumerate_graphs(const Constraints& c,
                           const std::function<void(const Graph&)>& visit);

/// Parallel scan: classify(g) runs on worker threads for every class;
/// non-null results are collected and merged sorted by canonical graph6,
/// independent of worker count.
struct CensusHit {
  int n = 0;
  int degree = -1;  // regular degree, -1 when not degree-constrained
  std::string canonical_g6;
  int orbit_count = 0;
  std::vector<int> cospectral_block_sizes;
  std::optional<std::pair<int, int>> witness_pair;  // labels of the canonical graph
  bool connected = false;
  bool tree = false;
};

struct ScanResult {
  long long total_graphs = 0;
  std::vector<CensusHit> hits;
};

ScanResult scan_graphs(const Constraints& c, const EnumOptions& opts,
                       const std::function<std::optional<CensusHit>(const Graph&)>& classify);

/// One (n, degree) slice of a census.
struct CensusSlice {
  int n = 0;
  int degree = -1;
  long long total_graphs = 0;
  long long hit_count = 0;
};

struct SearchReport {
  std::string kind;
  int n_max = 0;
  bool regular_only = false;
  std::vector<CensusSlice> slices;
  std::vector<CensusHit> hits;  // sorted by (n, degree, canonical bytes)
  double seconds = 0.0;
};

/// Graphs containing a cospectral but non-similar vertex pair.
/// With regular_only, enumerates each feasible degree; degrees above
/// (n-1)/2 are generated as edge complements of the low-degree run.
SearchReport census_non_similar_cospectral(int n_max, bool regular_only,
                                           const EnumOptions& opts = {});

/// Walk-regular graphs that are not vertex-transitive, by regular degree.
SearchReport census_walk_regular_non_vt(int n_max, const EnumOptions& opts = {});

}  // namespace cospec
