#pragma once

#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Vertex -> color class id. Class ids are contiguous from 0.
using Coloring = std::vector<int>;

/// Aut(G)-orbits; blocks ordered by minimum vertex.
struct OrbitPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> orbit_of;  // vertex -> index into blocks

  bool same_block(int a, int b) const { return orbit_of[a] == orbit_of[b]; }
};

struct CanonicalForm {
  std::string g6;               // canonical graph6 line
  std::vector<int> relabeling;  // vertex -> canonical position
};

/// Result of one refinement-guided backtracking search.
struct SymmetryResult {
  CanonicalForm canonical;
  std::vector<std::vector<int>> generators;  // verified automorphisms
  OrbitPartition orbits;
};

/// Coarsest equitable coloring refining `initial`; class numbering is
/// deterministic (classes ordered by minimum member vertex).
Coloring equitable_refinement(const Graph& g, const Coloring& initial);

/// Full search: canonical form, automorphism generators and exact orbits.
/// The initial invariant coloring is the vertex's walk-profile row class.
/// Graphs with loops are rejected (LoopsNotRepresentable).
SymmetryResult symmetry_analysis(const Graph& g);

OrbitPartition automorphism_orbits(const Graph& g);
bool are_similar(const Graph& g, VertexId a, VertexId b);
bool is_vertex_transitive(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Test oracle: orbits from all n! permutations. Handles loops. n <= 8.
OrbitPartition brute_force_orbits(const Graph& g);

bool is_automorphism(const Graph& g, const std::vector<int>& perm);

}  // namespace cospec
