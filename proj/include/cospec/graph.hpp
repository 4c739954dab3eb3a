#pragma once

#include <utility>
#include <vector>

#include "cospec/bitset128.hpp"
#include "cospec/error.hpp"

namespace cospec {

/// Hard cap on the vertex count. Two 64-bit words per adjacency row; the
/// largest graph the catalog audits has 120 vertices.
inline constexpr int kMaxVertices = 128;

using VertexId = int;

/// Immutable simple graph with optional self-loops kept in a separate bit-row.
/// A loop contributes exactly 1 to the diagonal of the adjacency matrix and 1
/// to the degree used for walk counting.
class Graph {
 public:
  Graph() : n_(1), adj_(1) {}

  static Graph build(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<int>& loops = {});

  int n() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  bool has_loop(int v) const { return loops_.test(v); }
  bool has_loops() const { return loops_.any(); }
  const BitSet128& row(int v) const { return adj_[v]; }
  const BitSet128& loops_row() const { return loops_; }
  int degree(int v) const { return adj_[v].count(); }
  /// Degree for walk-counting purposes: a loop adds 1.
  int walk_degree(int v) const { return degree(v) + (has_loop(v) ? 1 : 0); }

  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> loop_vertices() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  /// Relabels vertices: vertex v of the result is perm[v]... i.e. result has
  /// an edge {perm[u], perm[v]} for every edge {u, v}.
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<BitSet128> adj_;
  BitSet128 loops_;
};

Graph complement(const Graph& g);
bool is_connected(const Graph& g);

/// Minimum vertex cut size; n-1 for complete graphs. Throws Disconnected.
int vertex_connectivity(const Graph& g);
inline bool is_k_connected(const Graph& g, int k) { return vertex_connectivity(g) >= k; }

// graph6 interchange (simple loop-free graphs only).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

}  // namespace cospec
