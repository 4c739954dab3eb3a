#include "cospec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cospec {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfPairInEdgeList: return "SelfPairInEdgeList";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedBitVector: return "TruncatedBitVector";
    case Errc::NonCanonicalPadding: return "NonCanonicalPadding";
    case Errc::LoopsNotRepresentable: return "LoopsNotRepresentable";
    case Errc::Disconnected: return "Disconnected";
    case Errc::LengthOutOfRange: return "LengthOutOfRange";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::CorruptDataFile: return "CorruptDataFile";
    case Errc::AuditFailure: return "AuditFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::Mismatch: return "Mismatch";
  }
  return "UnknownError";
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges,
                   const std::vector<int>& loops) {
  if (n < 1) fail(Errc::OutOfRange, "vertex count must be at least 1");
  if (n > kMaxVertices) fail(Errc::SizeExceeded, "vertex count " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, BitSet128{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Errc::OutOfRange, "edge endpoint out of [0, n)");
    if (u == v) fail(Errc::SelfPairInEdgeList, "loop passed as edge {" + std::to_string(u) + "}");
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  for (int v : loops) {
    if (v < 0 || v >= n) fail(Errc::OutOfRange, "loop vertex out of [0, n)");
    g.loops_.set(v);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].count();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::vector<int> Graph::loop_vertices() const {
  std::vector<int> out;
  loops_.for_each([&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph g;
  g.n_ = n_;
  g.adj_.assign(n_, BitSet128{});
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) { g.adj_[perm[u]].set(perm[v]); });
  loops_.for_each([&](int v) { g.loops_.set(perm[v]); });
  return g;
}

Graph complement(const Graph& g) {
  if (g.has_loops()) fail(Errc::LoopsNotRepresentable, "complement of a loop-bearing graph");
  const int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

bool is_connected(const Graph& g) {
  BitSet128 seen, frontier;
  frontier.set(0);
  seen.set(0);
  while (frontier.any()) {
    BitSet128 next;
    frontier.for_each([&](int v) { next |= g.row(v); });
    frontier = next ^ (next & seen);
    seen |= next;
  }
  return seen.count() == g.n();
}

namespace {

// Unit-capacity max flow on the split-vertex network, stopping once `cap`
// augmenting paths are found. Node 2v = in-copy, 2v+1 = out-copy.
int vertex_disjoint_paths(const Graph& g, int s, int t, int cap) {
  const int n = g.n();
  const int N = 2 * n;  // node 2v = "in" copy, 2v+1 = "out" copy
  // residual 0/1 capacity matrix (N up to 256, so a flat byte matrix is fine)
  std::vector<unsigned char> res(size_t(N) * N, 0);
  auto at = [&](int a, int b) -> unsigned char& { return res[size_t(a) * N + b]; };
  for (int v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = 1;  // in -> out
    g.row(v).for_each([&](int u) { at(2 * v + 1, 2 * u) = 1; });
  }
  int flow = 0;
  std::vector<int> prev(N);
  while (flow < cap) {
    std::fill(prev.begin(), prev.end(), -1);
    std::queue<int> q;
    q.push(2 * s + 1);
    prev[2 * s + 1] = 2 * s + 1;
    while (!q.empty() && prev[2 * t] == -1) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < N; ++y)
        if (at(x, y) && prev[y] == -1) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[2 * t] == -1) break;
    for (int y = 2 * t; y != 2 * s + 1;) {
      int x = prev[y];
      at(x, y) = 0;
      at(y, x) = 1;
      y = x;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (g.n() == 1) return 0;
  if (!is_connected(g)) fail(Errc::Disconnected, "vertex_connectivity needs a connected graph");
  const int n = g.n();
  int best = n - 1;  // complete graph convention
  // kappa = min local connectivity over s in {v0} + N(v0) and t non-adjacent to s.
  std::vector<int> sources{0};
  g.row(0).for_each([&](int v) { sources.push_back(v); });
  for (int s : sources) {
    for (int t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      best = std::min(best, vertex_disjoint_paths(g, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

void append_n(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    // 63..258047 use the '~' + 3 byte header; we only ever need n <= 128.
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  if (g.has_loops()) fail(Errc::LoopsNotRepresentable, "graph6 cannot encode loops");
  const int n = g.n();
  std::string out;
  append_n(out, n);
  int bits = 0, have = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++have == 6) {
        out.push_back(char(bits + 63));
        bits = have = 0;
      }
    }
  if (have) out.push_back(char((bits << (6 - have)) + 63));
  return out;
}

Graph parse_graph6(const std::string& line) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) fail(Errc::TruncatedBitVector, "unexpected end of graph6 line");
    char c = line[pos++];
    if (c < 63 || c > 126) fail(Errc::MalformedHeader, "byte out of graph6 range");
    return c - 63;
  };
  if (line.empty()) fail(Errc::MalformedHeader, "empty graph6 line");
  long n;
  if (line[0] != '~') {
    n = next();
  } else {
    ++pos;
    if (pos < line.size() && line[pos] == '~')
      fail(Errc::SizeExceeded, "8-byte graph6 header (n > 258047) unsupported");
    n = next();
    n = (n << 6) | next();
    n = (n << 6) | next();
    if (n <= 62) fail(Errc::MalformedHeader, "long header used for small n");
  }
  if (n < 1) fail(Errc::MalformedHeader, "graph6 with zero vertices");
  if (n > kMaxVertices) fail(Errc::SizeExceeded, "graph6 with n = " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int bits = 0, have = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        bits = next();
        have = 6;
      }
      if ((bits >> (have - 1)) & 1) edges.emplace_back(i, j);
      --have;
    }
  if (have && (bits & ((1 << have) - 1)))
    fail(Errc::NonCanonicalPadding, "padding bits must be zero");
  if (pos != line.size()) fail(Errc::TruncatedBitVector, "trailing bytes after bit vector");
  return Graph::build(int(n), edges);
}

}  // namespace cospec
