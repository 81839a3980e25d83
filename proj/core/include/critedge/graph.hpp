#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critedge/error.hpp"

namespace critedge {

using Vertex = int;

inline constexpr int kMaxOrder = 62;

/// Packed set of vertices in [0, 64). Iteration is in ascending vertex order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= std::uint64_t{1} << v;
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph on at most 62 vertices stored as symmetric bit rows.
///
/// Every constructor validates symmetry and loop-freeness, so a Graph value in
/// hand always satisfies both.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Duplicates collapse silently; self-loops and out-of-range endpoints throw.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Bit k of `mask` is the k-th vertex pair in graph6 column order
  /// (0,1),(0,2),(1,2),(0,3),... Requires n <= 11 so the mask fits 64 bits.
  static Graph from_upper_mask(int n, std::uint64_t mask);

  /// Rows must already be symmetric and loop-free; validated.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  int size() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(Vertex v) const { return rows_[v]; }

  std::vector<Edge> edges() const;

  /// Number of edges with both endpoints in s.
  int edges_within(VertexSet s) const;
  /// Number of edges with one endpoint in a and one in b (a, b disjoint).
  int edges_between(VertexSet a, VertexSet b) const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Vertex `v` of the result is vertex `perm[v]` of this graph.
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph induced(VertexSet s) const;

  /// Connected components, each as a vertex set, ordered by lowest vertex.
  std::vector<VertexSet> components() const;
  bool connected() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int edges_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};

  void check_vertex(Vertex v) const;
};

/// N(u) ∩ N(v) with u and v removed.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// True iff g is complete multipartite with k parts of sizes floor(n/k) or
/// ceil(n/k). Decided by grouping vertices by neighborhood.
bool is_turan(const Graph& g, int k);

// ---- constructors for the graph families used throughout ----

Graph turan(int n, int k);
/// Two adjacent spine vertices (0, 1) and q pages (2..q+1).
Graph book(int q);
/// Poles are 0 and 1; path interiors follow in the order of `lengths`.
Graph theta(std::span<const int> lengths);
inline Graph theta(std::initializer_list<int> lengths) {
  return theta(std::span<const int>(lengths.begin(), lengths.size()));
}
/// Vertices of g keep their labels; h is shifted by g.order().
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

enum class BasicKind { Path, Cycle, Complete, Empty };
Graph basic(BasicKind kind, int n);
inline Graph path_graph(int n) { return basic(BasicKind::Path, n); }
inline Graph cycle_graph(int n) { return basic(BasicKind::Cycle, n); }
inline Graph complete_graph(int n) { return basic(BasicKind::Complete, n); }
inline Graph empty_graph(int n) { return basic(BasicKind::Empty, n); }
Graph complete_bipartite(int a, int b);
Graph petersen();

/// S_{n,k}: K_k joined with an independent set of n-k vertices. Clique is 0..k-1.
Graph clique_join_independent(int n, int k);

/// Lexicographically minimal upper-triangle bit string over all relabelings,
/// stored as the graph6 encoding of the minimizing relabeling.
struct CanonicalCode {
  std::string g6;
  auto operator<=>(const CanonicalCode&) const = default;
};

inline constexpr int kCanonicalMaxOrder = 10;

/// Throws OrderCap when n > 10.
CanonicalCode canonical_form(const Graph& g);
/// The relabeling of g whose graph6 encoding is canonical_form(g).
Graph canonical_graph(const Graph& g);

}  // namespace critedge
