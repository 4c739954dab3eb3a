#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Exact per-vertex closed-walk counts: counts(v, k) = (A^k)_{v,v} for
/// k = 0..n-1, with self-loops on the diagonal of A.
class WalkProfile {
 public:
  explicit WalkProfile(const Graph& g);

  int n() const { return n_; }
  const mpz_class& counts(int v, int k) const { return table_[size_t(v) * n_ + k]; }
  bool rows_equal(int a, int b) const;
  /// First k where the rows differ, or nullopt if cospectral.
  std::optional<int> first_difference(int a, int b) const;

 private:
  int n_;
  std::vector<mpz_class> table_;
};

/// Vertex partition by walk-profile row equality; blocks ordered by minimum
/// vertex, vertices ascending within a block.
struct CospectralPartition {
  std::vector<std::vector<int>> blocks;
};

bool are_cospectral(const Graph& g, VertexId a, VertexId b);
CospectralPartition cospectral_partition(const Graph& g);

/// True iff diag(A^k) is constant for every k <= n-1. Early-exits on the
/// first non-constant diagonal.
bool is_walk_regular(const Graph& g);

/// First walk length k with a non-constant diagonal, or nullopt when the
/// graph is walk-regular. Scans k = 2..kmax (kmax defaults to n-1).
std::optional<int> first_walk_irregularity(const Graph& g, int kmax = -1);

/// Per-vertex undirected cycle counts C_m(v) for 3 <= m <= max_length, plus
/// girth and the smallest strictly larger realized cycle length.
struct CycleCensus {
  int n = 0;
  int max_length = 0;
  std::vector<std::vector<long long>> per_vertex;  // per_vertex[m-3][v]
  std::optional<int> girth;
  std::optional<int> second_length;

  long long count(int v, int m) const { return per_vertex[m - 3][v]; }
  bool constant(int m) const;
  long long total(int m) const;  // number of distinct m-cycles
};

CycleCensus cycle_census(const Graph& g, int max_length = 10);
long long cycles_through(const Graph& g, VertexId v, int m);

/// Exact diagonal of A^k.
std::vector<mpz_class> walk_diagonal(const Graph& g, int k);

/// Calls fn once per undirected cycle of length 3..max_length, with the
/// cycle's vertex sequence (anchored at its minimum vertex).
void for_each_cycle(const Graph& g, int max_length,
                    const std::function<void(const std::vector<int>&)>& fn);

/// Path family showing that the k <= n-1 bound is tight: for odd n = 2l+1 a
/// plain path, for even n = 2l a path with a self-loop on its last vertex.
/// Vertices a = l-1 and b = l agree on diag(A^k) for k <= n-2 and differ at
/// k = n-1.
struct SharpnessInstance {
  Graph graph;
  int a = 0;
  int b = 0;
};
SharpnessInstance sharpness_instance(int n);

/// Vertex coloring by walk-profile row class (rows compared lexicographically
/// over k = 0..n-1). Used to seed the symmetry search.
std::vector<int> walk_profile_coloring(const Graph& g);

/// Closed-walk count predicted from degree and short-cycle counts, valid for
/// k = 3..6 under per-k hypotheses (regularity, triangle/quadrilateral
/// constancy). Throws HypothesisUnmet.
mpz_class predicted_diagonal(const Graph& g, const CycleCensus& census, VertexId v, int k);

}  // namespace cospec
