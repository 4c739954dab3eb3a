#include "cospec/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "cospec/symmetry.hpp"
#include "cospec/walk.hpp"

namespace cospec {

namespace {

void validate(const Constraints& c) {
  // full enumeration is budgeted for n <= 12; degree-constrained runs may go
  // slightly further
  const int cap = c.regular_degree ? 14 : 12;
  if (c.n < 1 || c.n > cap) fail(Errc::OutOfRange, "constraint n out of range");
  if (c.regular_degree && (*c.regular_degree < 0 || *c.regular_degree >= c.n))
    fail(Errc::OutOfRange, "regular degree must satisfy 0 <= d < n");
}

// Erdos-Gallai test for a descending degree sequence.
bool graphical(std::vector<int> deg) {
  std::sort(deg.rbegin(), deg.rend());
  const int n = int(deg.size());
  std::vector<long long> pre(n + 1, 0);
  for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] + deg[i];
  if (pre[n] % 2) return false;
  for (int k = 1; k <= n; ++k) {
    long long rhs = 1LL * k * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(deg[i], k);
    if (pre[k] > rhs) return false;
  }
  return true;
}

// Can a graph on k vertices (degrees as given) be completed to a d-regular
// graph on n vertices by appending vertices one at a time? Necessary
// conditions only; used to prune the augmentation tree.
bool regular_completable(const std::vector<int>& deg, int d, int n) {
  const int k = int(deg.size());
  const int r = n - k;
  long long deficiency = 0;
  for (int x : deg) {
    if (x > d) return false;
    if (d - x > r) return false;
    deficiency += d - x;
  }
  long long spare = 1LL * r * d - deficiency;  // twice the future internal edges
  if (spare < 0 || spare % 2) return false;
  if (r == 0) return deficiency == 0;
  std::vector<int> residual;
  residual.reserve(n);
  for (int x : deg) residual.push_back(d - x);
  for (int i = 0; i < r; ++i) residual.push_back(d);
  return graphical(std::move(residual));
}

struct Augmenter {
  Constraints c;
  std::function<void(const Graph&, const SymmetryResult&)> emit;
  std::atomic<long long>* budget = nullptr;  // counts children examined

  void charge() {
    if (budget && --(*budget) < 0)
      fail(Errc::BudgetExceeded, "enumeration node budget exhausted");
  }

  bool admissible(const Graph& g) const {
    if (c.max_edges && g.edge_count() > *c.max_edges) return false;
    if (c.regular_degree) {
      std::vector<int> deg(g.n());
      for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
      if (!regular_completable(deg, *c.regular_degree, c.n)) return false;
    }
    return true;
  }

  // Candidate neighbour subsets for the next vertex. The filters are
  // Aut-invariant, so the candidate set is a union of subset orbits.
  std::vector<std::uint32_t> candidate_masks(const Graph& g) const {
    const int k = g.n();
    std::vector<std::uint32_t> out;
    if (c.regular_degree) {
      const int d = *c.regular_degree;
      std::uint32_t open = 0;  // vertices that can still gain an edge
      for (int v = 0; v < k; ++v)
        if (g.degree(v) < d) open |= std::uint32_t(1) << v;
      // all submasks of `open` with at most d bits
      for (std::uint32_t m = open;; m = (m - 1) & open) {
        if (std::popcount(m) <= d) out.push_back(m);
        if (m == 0) break;
      }
      std::sort(out.begin(), out.end());
    } else {
      out.resize(std::size_t(1) << k);
      std::iota(out.begin(), out.end(), 0);
    }
    return out;
  }

  // Orbit representatives of the candidate subsets under Aut(g).
  std::vector<std::uint32_t> subset_reps(const Graph& g, const SymmetryResult& sym) const {
    const int k = g.n();
    std::vector<std::uint32_t> cand = candidate_masks(g);
    std::vector<std::uint32_t> reps;
    if (sym.generators.empty()) return cand;
    std::vector<bool> seen_bit;
    std::vector<std::uint32_t> stack;
    seen_bit.assign(std::size_t(1) << k, false);
    auto seen = [&](std::uint32_t m) -> bool { return seen_bit[m]; };
    auto mark = [&](std::uint32_t m) { seen_bit[m] = true; };
    for (std::uint32_t mask : cand) {
      if (seen(mask)) continue;
      reps.push_back(mask);
      mark(mask);
      stack.assign(1, mask);
      while (!stack.empty()) {
        std::uint32_t m = stack.back();
        stack.pop_back();
        for (const auto& sigma : sym.generators) {
          std::uint32_t img = 0;
          for (int v = 0; v < k; ++v)
            if ((m >> v) & 1) img |= std::uint32_t(1) << sigma[v];
          if (!seen(img)) {
            mark(img);
            stack.push_back(img);
          }
        }
      }
    }
    return reps;
  }

  // Children of an accepted graph g, i.e. accepted augmentations by one vertex.
  void children(const Graph& g, const SymmetryResult& sym,
                const std::function<void(const Graph&, const SymmetryResult&)>& out) {
    const int k = g.n();
    for (std::uint32_t mask : subset_reps(g, sym)) {
      std::vector<std::pair<int, int>> edges = g.edges();
      for (int v = 0; v < k; ++v)
        if ((mask >> v) & 1) edges.emplace_back(v, k);
      Graph child = Graph::build(k + 1, edges);
      if (!admissible(child)) continue;
      charge();
      SymmetryResult child_sym = symmetry_analysis(child);
      // canonical deletion: keep the child only when the newly added vertex
      // lies in the orbit of the vertex holding the last canonical position
      int last = -1;
      for (int v = 0; v <= k; ++v)
        if (child_sym.canonical.relabeling[v] == k) last = v;
      if (!child_sym.orbits.same_block(last, k)) continue;
      out(child, child_sym);
    }
  }

  void recurse(const Graph& g, const SymmetryResult& sym) {
    if (g.n() == c.n) {
      emit(g, sym);
      return;
    }
    children(g, sym, [&](const Graph& child, const SymmetryResult& child_sym) {
      recurse(child, child_sym);
    });
  }
};

Graph single_vertex() { return Graph::build(1, {}); }

bool passes_filters(const Graph& g, const Constraints& c) {
  if (c.regular_degree)
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) != *c.regular_degree) return false;
  if (c.connected_only && !is_connected(g)) return false;
  return true;
}

}  // namespace

long long enumerate_graphs(const Constraints& c,
                           const std::function<void(const Graph&)>& visit) {
  validate(c);
  long long count = 0;
  Augmenter aug{c, [&](const Graph& g, const SymmetryResult&) {
                  if (passes_filters(g, c)) {
                    ++count;
                    visit(g);
                  }
                }};
  Graph root = single_vertex();
  aug.recurse(root, symmetry_analysis(root));
  return count;
}

ScanResult scan_graphs(const Constraints& c, const EnumOptions& opts,
                       const std::function<std::optional<CensusHit>(const Graph&)>& classify) {
  validate(c);
  std::atomic<long long> budget{opts.node_budget < 0 ? (1LL << 62) : opts.node_budget};

  // Split the augmentation tree into independent jobs a few levels above the
  // target size, then process jobs on worker threads. Results are merged in
  // job order, so the outcome does not depend on the worker count.
  const int split_n = std::max(1, c.n - 6);
  std::vector<std::pair<Graph, SymmetryResult>> jobs;
  {
    Augmenter seed{c, {}, &budget};
    std::function<void(const Graph&, const SymmetryResult&)> grow =
        [&](const Graph& g, const SymmetryResult& sym) {
          if (g.n() == split_n) {
            jobs.emplace_back(g, sym);
            return;
          }
          seed.children(g, sym, grow);
        };
    Graph root = single_vertex();
    grow(root, symmetry_analysis(root));
  }

  struct JobResult {
    long long total = 0;
    std::vector<CensusHit> hits;
  };
  std::vector<JobResult> results(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        Augmenter aug{c,
                      [&](const Graph& g, const SymmetryResult&) {
                        if (!passes_filters(g, c)) return;
                        ++results[i].total;
                        if (auto hit = classify(g)) results[i].hits.push_back(std::move(*hit));
                      },
                      &budget};
        aug.recurse(jobs[i].first, jobs[i].second);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        next.store(jobs.size());
        return;
      }
    }
  };

  const int nw = std::max(1, opts.workers);
  if (nw == 1 || jobs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  ScanResult out;
  for (auto& r : results) {
    out.total_graphs += r.total;
    out.hits.insert(out.hits.end(), std::make_move_iterator(r.hits.begin()),
                    std::make_move_iterator(r.hits.end()));
  }
  std::sort(out.hits.begin(), out.hits.end(), [](const CensusHit& a, const CensusHit& b) {
    return a.canonical_g6 < b.canonical_g6;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Census pipelines

namespace {

// Hit record for a graph with a cospectral-but-not-similar pair; reported in
// the labels of the canonically relabeled graph.
std::optional<CensusHit> classify_cospectral_non_similar(const Graph& g, int degree) {
  CospectralPartition cp = cospectral_partition(g);
  bool candidate = false;
  for (const auto& block : cp.blocks) candidate |= block.size() > 1;
  if (!candidate) return std::nullopt;
  SymmetryResult sym = symmetry_analysis(g);
  std::optional<std::pair<int, int>> witness;
  for (const auto& block : cp.blocks) {
    for (size_t i = 0; i < block.size() && !witness; ++i)
      for (size_t j = i + 1; j < block.size() && !witness; ++j)
        if (!sym.orbits.same_block(block[i], block[j]))
          witness = std::make_pair(block[i], block[j]);
    if (witness) break;
  }
  if (!witness) return std::nullopt;
  CensusHit hit;
  hit.n = g.n();
  hit.degree = degree;
  hit.canonical_g6 = sym.canonical.g6;
  hit.orbit_count = int(sym.orbits.blocks.size());
  for (const auto& block : cp.blocks) hit.cospectral_block_sizes.push_back(int(block.size()));
  const auto& perm = sym.canonical.relabeling;
  hit.witness_pair = std::minmax(perm[witness->first], perm[witness->second]);
  hit.connected = is_connected(g);
  hit.tree = hit.connected && g.edge_count() == g.n() - 1;
  return hit;
}

// Triangle-count constancy, the cheap pre-filter before full profiles.
bool triangle_constant(const Graph& g) {
  int first = -1;
  for (int v = 0; v < g.n(); ++v) {
    int t = 0;
    g.row(v).for_each([&](int u) { t += (g.row(v) & g.row(u)).count(); });
    if (first < 0)
      first = t;
    else if (t != first)
      return false;
  }
  return true;
}

std::optional<CensusHit> classify_walk_regular_non_vt(const Graph& g, int degree) {
  if (!triangle_constant(g)) return std::nullopt;
  if (!is_walk_regular(g)) return std::nullopt;
  SymmetryResult sym = symmetry_analysis(g);
  if (sym.orbits.blocks.size() == 1) return std::nullopt;
  CensusHit hit;
  hit.n = g.n();
  hit.degree = degree;
  hit.canonical_g6 = sym.canonical.g6;
  hit.orbit_count = int(sym.orbits.blocks.size());
  CospectralPartition cp = cospectral_partition(g);
  for (const auto& block : cp.blocks) hit.cospectral_block_sizes.push_back(int(block.size()));
  // any cross-orbit pair witnesses non-similarity; all vertices are cospectral
  const auto& perm = sym.canonical.relabeling;
  hit.witness_pair =
      std::minmax(perm[sym.orbits.blocks[0][0]], perm[sym.orbits.blocks[1][0]]);
  hit.connected = is_connected(g);
  hit.tree = false;
  return hit;
}

using Classifier = std::function<std::optional<CensusHit>(const Graph&, int degree)>;

// Runs one degree-indexed slice; degrees above (n-1)/2 are produced as edge
// complements of the mirror-degree enumeration.
void run_regular_slice(SearchReport& report, int n, int d, const EnumOptions& opts,
                       const Classifier& classify) {
  const int mirror = n - 1 - d;
  const bool complemented = d > mirror;
  Constraints c;
  c.n = n;
  c.regular_degree = complemented ? mirror : d;
  ScanResult r = scan_graphs(c, opts, [&](const Graph& g) -> std::optional<CensusHit> {
    return classify(complemented ? complement(g) : g, d);
  });
  report.slices.push_back({n, d, r.total_graphs, (long long)r.hits.size()});
  report.hits.insert(report.hits.end(), std::make_move_iterator(r.hits.begin()),
                     std::make_move_iterator(r.hits.end()));
}

void finish(SearchReport& report, std::chrono::steady_clock::time_point t0) {
  std::sort(report.hits.begin(), report.hits.end(),
            [](const CensusHit& a, const CensusHit& b) {
              return std::tie(a.n, a.degree, a.canonical_g6) <
                     std::tie(b.n, b.degree, b.canonical_g6);
            });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SearchReport census_non_similar_cospectral(int n_max, bool regular_only,
                                           const EnumOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "non_similar_cospectral";
  report.n_max = n_max;
  report.regular_only = regular_only;
  for (int n = 1; n <= n_max; ++n) {
    if (!regular_only) {
      Constraints c;
      c.n = n;
      ScanResult r = scan_graphs(c, opts, [&](const Graph& g) {
        return classify_cospectral_non_similar(g, -1);
      });
      report.slices.push_back({n, -1, r.total_graphs, (long long)r.hits.size()});
      report.hits.insert(report.hits.end(), std::make_move_iterator(r.hits.begin()),
                         std::make_move_iterator(r.hits.end()));
    } else {
      for (int d = 0; d < n; ++d)
        run_regular_slice(report, n, d, opts, classify_cospectral_non_similar);
    }
  }
  finish(report, t0);
  return report;
}

SearchReport census_walk_regular_non_vt(int n_max, const EnumOptions& opts) {
  if (n_max > 14) fail(Errc::BudgetExceeded, "walk-regular census budgeted to n <= 14");
  auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "walk_regular_non_vertex_transitive";
  report.n_max = n_max;
  report.regular_only = true;
  for (int n = 1; n <= n_max; ++n)
    for (int d = 0; d < n; ++d)
      run_regular_slice(report, n, d, opts, classify_walk_regular_non_vt);
  finish(report, t0);
  return report;
}

}  // namespace cospec
