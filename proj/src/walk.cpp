#include "cospec/walk.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <type_traits>

namespace cospec {

namespace {

// One step of B <- B * A using adjacency sums; A's column j is the neighbour
// set of j plus j itself when j carries a loop.
template <class Int>
void walk_step(const Graph& g, const std::vector<Int>& b, std::vector<Int>& out) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const Int* row = &b[size_t(i) * n];
    Int* orow = &out[size_t(i) * n];
    for (int j = 0; j < n; ++j) {
      Int acc = g.has_loop(j) ? row[j] : Int(0);
      g.row(j).for_each([&](int w) { acc += row[w]; });
      orow[j] = acc;
    }
  }
}

// Entries of A^k are bounded by (max walk degree)^k.
bool fits_u64(const Graph& g, int kmax) {
  int dmax = 1;
  for (int v = 0; v < g.n(); ++v) dmax = std::max(dmax, g.walk_degree(v));
  return kmax * std::log2(double(dmax)) < 62.0;
}

template <class Int>
std::vector<Int> profile_table(const Graph& g) {
  const int n = g.n();
  std::vector<Int> table(size_t(n) * n);
  std::vector<Int> b(size_t(n) * n, Int(0)), next(size_t(n) * n, Int(0));
  for (int i = 0; i < n; ++i) b[size_t(i) * n + i] = 1;  // A^0 = I
  for (int v = 0; v < n; ++v) table[size_t(v) * n + 0] = 1;
  for (int k = 1; k < n; ++k) {
    walk_step(g, b, next);
    b.swap(next);
    for (int v = 0; v < n; ++v) table[size_t(v) * n + k] = b[size_t(v) * n + v];
  }
  return table;
}

}  // namespace

WalkProfile::WalkProfile(const Graph& g) : n_(g.n()) {
  if (fits_u64(g, n_ - 1)) {
    auto t = profile_table<unsigned long long>(g);
    table_.reserve(t.size());
    for (auto x : t) table_.emplace_back(mpz_class(static_cast<unsigned long>(x)));
  } else {
    table_ = profile_table<mpz_class>(g);
  }
}

bool WalkProfile::rows_equal(int a, int b) const { return !first_difference(a, b); }

std::optional<int> WalkProfile::first_difference(int a, int b) const {
  for (int k = 0; k < n_; ++k)
    if (counts(a, k) != counts(b, k)) return k;
  return std::nullopt;
}

bool are_cospectral(const Graph& g, VertexId a, VertexId b) {
  return WalkProfile(g).rows_equal(a, b);
}

CospectralPartition cospectral_partition(const Graph& g) {
  WalkProfile p(g);
  const int n = g.n();
  CospectralPartition part;
  std::vector<bool> placed(n, false);
  for (int v = 0; v < n; ++v) {
    if (placed[v]) continue;
    std::vector<int> block{v};
    placed[v] = true;
    for (int u = v + 1; u < n; ++u)
      if (!placed[u] && p.rows_equal(v, u)) {
        block.push_back(u);
        placed[u] = true;
      }
    part.blocks.push_back(std::move(block));
  }
  return part;
}

std::optional<int> first_walk_irregularity(const Graph& g, int kmax) {
  const int n = g.n();
  if (kmax < 0) kmax = n - 1;
  if (n == 1) return std::nullopt;
  // diag(A^1): loops must be uniform too.
  for (int v = 1; v < n; ++v)
    if (g.has_loop(v) != g.has_loop(0)) return 1;

  auto scan = [&](auto zero) -> std::optional<int> {
    using Int = decltype(zero);
    std::vector<Int> b(size_t(n) * n, Int(0)), next(size_t(n) * n, Int(0));
    for (int i = 0; i < n; ++i) b[size_t(i) * n + i] = 1;
    for (int k = 1; k <= kmax; ++k) {
      walk_step(g, b, next);
      b.swap(next);
      for (int v = 1; v < n; ++v)
        if (b[size_t(v) * n + v] != b[0]) return k;
    }
    return std::nullopt;
  };
  if (fits_u64(g, kmax)) return scan((unsigned long long)0);
  return scan(mpz_class(0));
}

bool is_walk_regular(const Graph& g) { return !first_walk_irregularity(g); }

namespace {

template <class Int>
std::vector<int> coloring_from_table(int n, const std::vector<Int>& table) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](int a, int b) {
    for (int k = 0; k < n; ++k) {
      const Int& x = table[size_t(a) * n + k];
      const Int& y = table[size_t(b) * n + k];
      if (x != y) return x < y;
    }
    return false;
  };
  std::stable_sort(order.begin(), order.end(), row_less);
  std::vector<int> color(n, 0);
  int cls = 0;
  for (int i = 1; i < n; ++i) {
    if (row_less(order[i - 1], order[i])) ++cls;
    color[order[i]] = cls;
  }
  color[order[0]] = 0;
  return color;
}

}  // namespace

SharpnessInstance sharpness_instance(int n) {
  if (n < 3) fail(Errc::ParameterOutOfRange, "sharpness family starts at n = 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  std::vector<int> loops;
  if (n % 2 == 0) loops.push_back(n - 1);
  const int l = n / 2;  // l from n = 2l or n = 2l+1; pair is (l, l+1) 1-based
  return SharpnessInstance{Graph::build(n, edges, loops), l - 1, l};
}

std::vector<int> walk_profile_coloring(const Graph& g) {
  const int n = g.n();
  if (fits_u64(g, n - 1))
    return coloring_from_table(n, profile_table<unsigned long long>(g));
  return coloring_from_table(n, profile_table<mpz_class>(g));
}

// ---------------------------------------------------------------------------
// Cycle counting by DFS path enumeration. Each undirected cycle is visited
// exactly once: anchored at its minimum vertex, second vertex < last vertex.

namespace {

struct CycleDfs {
  const Graph& g;
  int max_len;
  std::vector<int> path;
  BitSet128 on_path;
  // called with the full vertex list of each cycle found
  const std::function<void(const std::vector<int>&)>& emit;

  void run() {
    const int n = g.n();
    for (int s = 0; s < n; ++s) {
      path = {s};
      on_path = BitSet128{};
      on_path.set(s);
      extend(s, s);
    }
  }

  void extend(int s, int v) {
    g.row(v).for_each([&](int w) {
      if (w < s) return;  // anchor at minimum vertex
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) emit(path);
        return;
      }
      if (int(path.size()) >= max_len || on_path.test(w)) return;
      path.push_back(w);
      on_path.set(w);
      extend(s, w);
      on_path.reset(w);
      path.pop_back();
    });
  }
};

}  // namespace

CycleCensus cycle_census(const Graph& g, int max_length) {
  if (max_length < 3) fail(Errc::LengthOutOfRange, "cycle census cap below 3");
  CycleCensus c;
  c.n = g.n();
  c.max_length = max_length;
  c.per_vertex.assign(max_length - 2, std::vector<long long>(g.n(), 0));
  std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& cyc) {
    const int m = int(cyc.size());
    for (int v : cyc) ++c.per_vertex[m - 3][v];
  };
  CycleDfs dfs{g, max_length, {}, {}, emit};
  dfs.run();
  for (int m = 3; m <= max_length; ++m)
    if (c.total(m) > 0) {
      if (!c.girth)
        c.girth = m;
      else if (!c.second_length)
        c.second_length = m;
    }
  return c;
}

bool CycleCensus::constant(int m) const {
  const auto& row = per_vertex[m - 3];
  return std::all_of(row.begin(), row.end(), [&](long long x) { return x == row[0]; });
}

long long CycleCensus::total(int m) const {
  long long s = 0;
  for (long long x : per_vertex[m - 3]) s += x;
  return s / m;
}

long long cycles_through(const Graph& g, VertexId v, int m) {
  if (m < 3 || m > g.n()) fail(Errc::LengthOutOfRange, "cycle length " + std::to_string(m));
  return cycle_census(g, m).count(v, m);
}

std::vector<mpz_class> walk_diagonal(const Graph& g, int k) {
  const int n = g.n();
  if (k < 0) fail(Errc::LengthOutOfRange, "negative walk length");
  std::vector<mpz_class> diag(n);
  auto run = [&](auto zero) {
    using Int = decltype(zero);
    std::vector<Int> b(size_t(n) * n, Int(0)), next(size_t(n) * n, Int(0));
    for (int i = 0; i < n; ++i) b[size_t(i) * n + i] = 1;
    for (int step = 0; step < k; ++step) {
      walk_step(g, b, next);
      b.swap(next);
    }
    for (int v = 0; v < n; ++v) {
      if constexpr (std::is_same_v<Int, mpz_class>)
        diag[v] = b[size_t(v) * n + v];
      else
        diag[v] = mpz_class(static_cast<unsigned long>(b[size_t(v) * n + v]));
    }
  };
  if (fits_u64(g, k))
    run((unsigned long long)0);
  else
    run(mpz_class(0));
  return diag;
}

void for_each_cycle(const Graph& g, int max_length,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (max_length < 3) fail(Errc::LengthOutOfRange, "cycle length cap below 3");
  CycleDfs dfs{g, max_length, {}, {}, fn};
  dfs.run();
}

mpz_class predicted_diagonal(const Graph& g, const CycleCensus& census, VertexId v, int k) {
  if (k < 3 || k > 6) fail(Errc::HypothesisUnmet, "closed-walk formulas cover k = 3..6 only");
  if (g.has_loops()) fail(Errc::HypothesisUnmet, "formulas assume a simple graph");
  if (census.max_length < std::max(4, k))
    fail(Errc::LengthOutOfRange, "cycle census too short for the requested k");
  const long d = g.degree(0);
  auto require_regular = [&] {
    for (int u = 0; u < g.n(); ++u)
      if (g.degree(u) != d) fail(Errc::HypothesisUnmet, "graph is not regular");
  };
  auto cyc = [&](int m) { return mpz_class(long(census.count(v, m))); };
  switch (k) {
    case 3:
      return 2 * cyc(3);
    case 4:
      require_regular();
      return mpz_class(2 * d * d - d) + 2 * cyc(4);
    case 5: {
      require_regular();
      if (!census.constant(3)) fail(Errc::HypothesisUnmet, "C_3(v) is not constant");
      const long c3 = long(census.count(0, 3));
      return mpz_class(10 * (d - 1) * c3) + 2 * cyc(5);
    }
    default: {  // k == 6
      require_regular();
      if (!census.constant(3)) fail(Errc::HypothesisUnmet, "C_3(v) is not constant");
      if (!census.constant(4)) fail(Errc::HypothesisUnmet, "C_4(v) is not constant");
      const long c3 = long(census.count(0, 3));
      if (c3 > 1) fail(Errc::HypothesisUnmet, "C_3 must be 0 or 1");
      const long c4 = long(census.count(0, 4));
      mpz_class base = mpz_class(5 * d * d * d - 6 * d * d + 2 * d) + 12 * (d - 1) * mpz_class(c4);
      return base + 2 * cyc(6) + (c3 == 1 ? 2 : 0);
    }
  }
}

}  // namespace cospec
