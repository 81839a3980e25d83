#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critedge/graph.hpp"

namespace critedge {

/// Target subgraph family.
///
/// Book(q): q triangles sharing an edge. Theta123(l): theta(1,2,l).
/// Cycle(t): cycle of length t. PathOnK(k): path with k vertices.
struct PatternSpec {
  enum class Kind { Book, Theta123, Cycle, PathOnK };
  Kind kind = Kind::Book;
  int param = 1;

  static PatternSpec book(int q);
  static PatternSpec theta123(int l);
  static PatternSpec cycle(int t);
  static PatternSpec path_on(int k);

  /// "book:Q", "theta:L", "cycle:T", "path:K" (case-sensitive).
  static PatternSpec parse(std::string_view text);
  std::string to_string() const;

  /// Vertex count of the pattern graph.
  int order() const;
  /// The pattern itself as a graph, used by oracles and round-trip checks.
  Graph graph() const;

  /// Theta123(2) is B_2 and Cycle(3) is B_1; everything else is unchanged.
  PatternSpec normalized() const;

  bool operator==(const PatternSpec&) const = default;
};

/// First occurrence found, in deterministic search order. `vertices` lists the
/// occurrence: spine then pages for books; u, v, w then the long u-v path's
/// interior for theta; the cycle in order; the path in order.
struct PatternWitness {
  std::vector<Vertex> vertices;
  /// The edge whose removal destroys this occurrence most directly: the book
  /// spine, the theta chord, the first cycle/path edge.
  Edge critical_edge;
};

/// Max over edges uv of |N(u) ∩ N(v)|; 0 for triangle-free graphs.
int booksize(const Graph& g);

bool contains(const Graph& g, const PatternSpec& p);
std::optional<PatternWitness> find_pattern(const Graph& g, const PatternSpec& p);

/// True iff a u-v path with exactly `len` edges exists whose internal
/// vertices avoid `excluded`.
bool path_exists_exact(const Graph& g, Vertex u, Vertex v, int len, VertexSet excluded);
/// As above, returning the path (u first, v last).
std::optional<std::vector<Vertex>> find_path_exact(const Graph& g, Vertex u, Vertex v, int len,
                                                   VertexSet excluded);

inline constexpr int kLongestPathMaxOrder = 16;

/// Edges on a longest path. Exhaustive subset DP; n <= 16.
int longest_path_edges(const Graph& g);

/// Longest path with both endpoints in x, for g bipartite with parts x and
/// V \ x. 0 when there is none. n <= 16.
int longest_xx_path_edges(const Graph& g, VertexSet x);

}  // namespace critedge
