#pragma once

// Test-side reference implementations. They only read adjacency through
// Graph::adjacent and never call the library routines they check.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "critedge/graph.hpp"

namespace oracle {

using critedge::Graph;

inline Eigen::MatrixXd adjacency(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) a(i, j) = 1.0;
  return a;
}

/// Largest adjacency eigenvalue from a dense symmetric solver.
inline double rho(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) m[i][j] = g.adjacent(i, j);
  return m;
}

/// graph6 straight from the format description: header byte n+63, then the
/// upper triangle column by column, six bits per byte, zero padded.
inline std::string g6(const std::vector<std::vector<bool>>& m) {
  const int n = static_cast<int>(m.size());
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(m[i][j] ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

inline std::string g6(const Graph& g) { return g6(matrix(g)); }

/// Minimum graph6 string over all n! relabelings.
inline std::string canonical(const Graph& g) {
  const int n = g.order();
  const auto m = matrix(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i][j] = m[perm[i]][perm[j]];
    std::string s = g6(r);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int booksize(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      int c = 0;
      for (int w = 0; w < g.order(); ++w)
        if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) ++c;
      best = std::max(best, c);
    }
  return best;
}

/// Is H a (not necessarily induced) subgraph of G? Plain backtracking over
/// injective vertex maps.
inline bool subgraph(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k > n) return false;
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (h.adjacent(i, j) && !g.adjacent(v, map[j])) ok = false;
      if (!ok) continue;
      used[v] = true;
      map[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

inline int longest_path(const Graph& g, const std::function<bool(int)>& endpoint_ok = {}) {
  const int n = g.order();
  int best = 0;
  std::vector<bool> seen(n, false);
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    if (!endpoint_ok || (endpoint_ok(start) && endpoint_ok(v))) best = std::max(best, len);
    for (int w = 0; w < n; ++w) {
      if (seen[w] || !g.adjacent(v, w)) continue;
      seen[w] = true;
      dfs(start, w, len + 1);
      seen[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    seen[s] = true;
    dfs(s, s, 0);
    seen[s] = false;
  }
  return best;
}

/// Complete k-partite with part sizes floor(n/k) or ceil(n/k), decided by
/// comparing canonical strings against an independently built T_{n,k}.
inline bool turan_shape(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) return false;
  std::vector<int> part(n);
  for (int v = 0; v < n; ++v) part[v] = v % k;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = i != j && part[i] != part[j];
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j]) edges.emplace_back(i, j);
  return canonical(Graph::from_edge_list(n, edges)) == canonical(g);
}

inline std::int64_t turan_edges(int n, int k) {
  std::int64_t e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i % k != j % k) ++e;
  return e;
}

}  // namespace oracle
