#include "cospec/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "cospec/walk.hpp"

namespace cospec {

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    if (g.has_loop(u) != g.has_loop(perm[u])) return false;
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

using Cells = std::vector<std::vector<int>>;

BitSet128 cell_mask(const std::vector<int>& cell) {
  BitSet128 m;
  for (int v : cell) m.set(v);
  return m;
}

// Worklist refinement to the coarsest equitable partition. Splits order cells
// by neighbour count, so the cell sequence commutes with any relabeling.
void refine(const Graph& g, Cells& cells) {
  std::deque<BitSet128> work;
  for (const auto& cell : cells) work.push_back(cell_mask(cell));
  while (!work.empty()) {
    const BitSet128 mask = work.front();
    work.pop_front();
    for (size_t c = 0; c < cells.size(); ++c) {
      auto& cell = cells[c];
      if (cell.size() <= 1) continue;
      const int first_count = (g.row(cell[0]) & mask).count();
      bool uniform = true;
      for (size_t i = 1; i < cell.size(); ++i)
        if ((g.row(cell[i]) & mask).count() != first_count) {
          uniform = false;
          break;
        }
      if (uniform) continue;
      std::map<int, std::vector<int>> by_count;
      for (int v : cell) by_count[(g.row(v) & mask).count()].push_back(v);
      Cells pieces;
      pieces.reserve(by_count.size());
      for (auto& [cnt, vs] : by_count) pieces.push_back(std::move(vs));
      cells.erase(cells.begin() + c);
      cells.insert(cells.begin() + c, std::make_move_iterator(pieces.begin()),
                   std::make_move_iterator(pieces.end()));
      for (size_t i = c; i < c + pieces.size(); ++i) work.push_back(cell_mask(cells[i]));
      c += pieces.size() - 1;
    }
  }
}

std::string graph6_header(int n) {
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
  return out;
}

Cells cells_from_coloring(const Coloring& color) {
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  Cells cells(classes);
  for (int v = 0; v < int(color.size()); ++v) cells[color[v]].push_back(v);
  return cells;
}

struct SearchState {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> generators;
  std::string best_cert, first_cert;
  std::vector<int> best_perm, first_perm;

  // graph6 body of g relabeled by perm (vertex -> position).
  std::string cert_of(const std::vector<int>& perm) const {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::string out;
    int bits = 0, have = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        bits = (bits << 1) | (g.has_edge(inv[i], inv[j]) ? 1 : 0);
        if (++have == 6) {
          out.push_back(char(bits + 63));
          bits = have = 0;
        }
      }
    if (have) out.push_back(char((bits << (6 - have)) + 63));
    return out;
  }

  void add_generator(std::vector<int> sigma) {
    if (std::all_of(sigma.begin(), sigma.end(),
                    [i = 0](int x) mutable { return x == i++; }))
      return;
    if (!is_automorphism(g, sigma)) return;  // never expected; defends the cert path
    if (std::find(generators.begin(), generators.end(), sigma) == generators.end())
      generators.push_back(std::move(sigma));
  }

  void leaf_automorphism(const std::vector<int>& perm, const std::vector<int>& other_perm) {
    std::vector<int> inv_other(n), sigma(n);
    for (int v = 0; v < n; ++v) inv_other[other_perm[v]] = v;
    for (int v = 0; v < n; ++v) sigma[v] = inv_other[perm[v]];
    add_generator(std::move(sigma));
  }

  void handle_leaf(const Cells& cells) {
    std::vector<int> perm(n);
    for (int pos = 0; pos < int(cells.size()); ++pos) perm[cells[pos][0]] = pos;
    std::string cert = cert_of(perm);
    if (first_perm.empty()) {
      first_cert = cert;
      first_perm = perm;
      best_cert = std::move(cert);
      best_perm = std::move(perm);
      return;
    }
    if (cert == first_cert) leaf_automorphism(perm, first_perm);
    else if (cert == best_cert) leaf_automorphism(perm, best_perm);
    if (cert < best_cert) {
      best_cert = std::move(cert);
      best_perm = std::move(perm);
    }
  }

  // Union-find over the subgroup generated by the generators fixing `prefix`
  // pointwise. Sound pruning: skip a branch vertex provably equivalent to an
  // explored sibling.
  UnionFind prefix_orbits(const std::vector<int>& prefix) const {
    UnionFind uf(n);
    for (const auto& sigma : generators) {
      bool fixes = true;
      for (int v : prefix)
        if (sigma[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) uf.unite(v, sigma[v]);
    }
    return uf;
  }

  void search(const Cells& cells, std::vector<int>& prefix) {
    int target = -1;
    size_t target_size = size_t(-1);
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && cells[i].size() < target_size) {
        target = int(i);
        target_size = cells[i].size();
      }
    if (target < 0) {
      handle_leaf(cells);
      return;
    }
    std::vector<int> branched;
    for (int u : cells[target]) {
      if (!branched.empty()) {
        UnionFind uf = prefix_orbits(prefix);
        bool skip = false;
        for (int w : branched)
          if (uf.find(w) == uf.find(u)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (int i = 0; i < int(cells.size()); ++i) {
        if (i == target) {
          child.push_back({u});
          std::vector<int> rest;
          rest.reserve(cells[i].size() - 1);
          for (int v : cells[i])
            if (v != u) rest.push_back(v);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      refine(g, child);
      prefix.push_back(u);
      search(child, prefix);
      prefix.pop_back();
      branched.push_back(u);
    }
  }
};

OrbitPartition orbits_from_generators(int n, const std::vector<std::vector<int>>& gens) {
  UnionFind uf(n);
  for (const auto& sigma : gens)
    for (int v = 0; v < n; ++v) uf.unite(v, sigma[v]);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  OrbitPartition part;
  part.orbit_of.assign(n, -1);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, vs] : by_root) blocks.push_back(std::move(vs));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (int i = 0; i < int(blocks.size()); ++i)
    for (int v : blocks[i]) part.orbit_of[v] = i;
  part.blocks = std::move(blocks);
  return part;
}

}  // namespace

Coloring equitable_refinement(const Graph& g, const Coloring& initial) {
  if (int(initial.size()) != g.n()) fail(Errc::OutOfRange, "coloring size mismatch");
  Cells cells = cells_from_coloring(initial);
  refine(g, cells);
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  Coloring out(g.n());
  for (int i = 0; i < int(cells.size()); ++i)
    for (int v : cells[i]) out[v] = i;
  return out;
}

SymmetryResult symmetry_analysis(const Graph& g) {
  if (g.has_loops()) fail(Errc::LoopsNotRepresentable, "symmetry search covers simple graphs");
  const int n = g.n();
  SearchState st{g, n, {}, {}, {}, {}, {}};
  Cells cells = cells_from_coloring(walk_profile_coloring(g));
  refine(g, cells);
  std::vector<int> prefix;
  st.search(cells, prefix);

  SymmetryResult res;
  res.canonical.g6 = graph6_header(n) + st.best_cert;
  res.canonical.relabeling = std::move(st.best_perm);
  res.generators = std::move(st.generators);
  res.orbits = orbits_from_generators(n, res.generators);
  return res;
}

OrbitPartition automorphism_orbits(const Graph& g) {
  if (g.has_loops()) return brute_force_orbits(g);
  return symmetry_analysis(g).orbits;
}

bool are_similar(const Graph& g, VertexId a, VertexId b) {
  return automorphism_orbits(g).same_block(a, b);
}

bool is_vertex_transitive(const Graph& g) { return automorphism_orbits(g).blocks.size() == 1; }

CanonicalForm canonical_form(const Graph& g) {
  if (g.has_loops()) fail(Errc::LoopsNotRepresentable, "canonical form covers simple graphs");
  return symmetry_analysis(g).canonical;
}

OrbitPartition brute_force_orbits(const Graph& g) {
  const int n = g.n();
  if (n > 8) fail(Errc::TooLarge, "brute-force orbits capped at n = 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> gens;
  do {
    if (is_automorphism(g, perm)) gens.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbits_from_generators(n, gens);
}

}  // namespace cospec
