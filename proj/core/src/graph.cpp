#include "critedge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "critedge/graph6.hpp"

namespace critedge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::OrderCap: return "OrderCap";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::EdgelessGraph: return "EdgelessGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotBipartiteWithGivenParts: return "NotBipartiteWithGivenParts";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::InvalidByte: return "InvalidByte";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::TrailingData: return "TrailingData";
    case ErrorKind::NonzeroPadding: return "NonzeroPadding";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "graph order must be at least 1");
  if (n > kMaxOrder) {
    throw Error(ErrorKind::OrderCap, "order " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
  }
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
  }
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) degree_sum += std::popcount(g.rows_[v]);
  g.edges_ = degree_sum / 2;
  return g;
}

Graph Graph::from_upper_mask(int n, std::uint64_t mask) {
  if (n > 11) throw Error(ErrorKind::OrderCap, "upper-triangle mask supports n <= 11");
  Graph g(n);
  // Column j occupies the j bits starting at j(j-1)/2.
  int offset = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint64_t col = (mask >> offset) & ((std::uint64_t{1} << j) - 1);
    offset += j;
    g.rows_[j] |= col;
    for (std::uint64_t rest = col; rest; rest &= rest - 1) {
      g.rows_[std::countr_zero(rest)] |= std::uint64_t{1} << j;
    }
  }
  g.edges_ = std::popcount(mask & ((std::uint64_t{1} << offset) - 1));
  return g;
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "row count does not match order");
  }
  const std::uint64_t all = VertexSet::range(n).bits();
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw Error(ErrorKind::InvalidVertex, "row references vertex >= n");
    if ((rows[v] >> v) & 1U) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(v));
    g.rows_[v] = rows[v];
    degree_sum += std::popcount(rows[v]);
  }
  for (int u = 0; u < n; ++u) {
    for (Vertex v : VertexSet(rows[u])) {
      if (!((rows[v] >> u) & 1U)) throw Error(ErrorKind::InvalidArgument, "adjacency rows are not symmetric");
    }
  }
  g.edges_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(rows_[u] & ~VertexSet::range(u + 1).bits())) out.emplace_back(u, v);
  }
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (Vertex v : s) twice += std::popcount(rows_[v] & s.bits());
  return twice / 2;
}

int Graph::edges_between(VertexSet a, VertexSet b) const {
  int count = 0;
  for (Vertex v : a) count += std::popcount(rows_[v] & b.bits());
  return count;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (!adjacent(u, v)) {
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
    ++g.edges_;
  }
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (adjacent(u, v)) {
    g.rows_[u] &= ~(std::uint64_t{1} << v);
    g.rows_[v] &= ~(std::uint64_t{1} << u);
    --g.edges_;
  }
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::InvalidArgument, "permutation size does not match order");
  }
  std::array<Vertex, kMaxOrder> inverse{};
  std::uint64_t seen = 0;
  for (int v = 0; v < n_; ++v) {
    check_vertex(perm[v]);
    if ((seen >> perm[v]) & 1U) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    seen |= std::uint64_t{1} << perm[v];
    inverse[perm[v]] = v;
  }
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    std::uint64_t row = 0;
    for (Vertex w : VertexSet(rows_[perm[v]])) row |= std::uint64_t{1} << inverse[w];
    g.rows_[v] = row;
  }
  g.edges_ = edges_;
  return g;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<Vertex> keep = s.to_vector();
  std::array<Vertex, kMaxOrder> index{};
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  Graph g(static_cast<int>(keep.size()));
  int degree_sum = 0;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::uint64_t row = 0;
    for (Vertex w : VertexSet(rows_[keep[i]]) & s) row |= std::uint64_t{1} << index[w];
    g.rows_[i] = row;
    degree_sum += std::popcount(row);
  }
  g.edges_ = degree_sum / 2;
  return g;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::uint64_t unseen = VertexSet::range(n_).bits();
  while (unseen) {
    std::uint64_t comp = unseen & -unseen;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (Vertex v : VertexSet(frontier)) next |= rows_[v];
      frontier = next & ~comp;
      comp |= next;
    }
    out.emplace_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool Graph::connected() const { return components().size() == 1; }

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw Error(ErrorKind::InvalidVertex, "vertex out of range");
  }
  if (u == v) throw Error(ErrorKind::InvalidArgument, "common_neighbors needs distinct vertices");
  return (g.neighbors(u) & g.neighbors(v)).without(u).without(v);
}

bool is_turan(const Graph& g, int k) {
  if (k < 1) return false;
  const int n = g.order();
  if (k > n) return false;
  // In a complete multipartite graph, the parts are exactly the classes of
  // vertices sharing an open neighborhood, and each part is independent.
  std::uint64_t unassigned = g.vertices().bits();
  std::vector<VertexSet> parts;
  while (unassigned) {
    Vertex v = std::countr_zero(unassigned);
    std::uint64_t part = 0;
    for (Vertex w : VertexSet(unassigned)) {
      if (g.row(w) == g.row(v)) part |= std::uint64_t{1} << w;
    }
    parts.emplace_back(part);
    unassigned &= ~part;
    if (static_cast<int>(parts.size()) > k) return false;
  }
  if (static_cast<int>(parts.size()) != k) return false;
  const std::uint64_t all = g.vertices().bits();
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  for (VertexSet part : parts) {
    if (part.size() < lo || part.size() > hi) return false;
    if (g.row(part.first()) != (all & ~part.bits())) return false;
  }
  return true;
}

Graph turan(int n, int k) {
  check_order(n);
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidArgument, "turan requires 1 <= k <= n");
  }
  // Larger parts first, ascending labels.
  std::vector<std::uint64_t> rows(n);
  const int s = n / k;
  const int big = n % k;
  std::vector<std::uint64_t> part_masks;
  int next = 0;
  for (int p = 0; p < k; ++p) {
    const int size = s + (p < big ? 1 : 0);
    std::uint64_t mask = 0;
    for (int i = 0; i < size; ++i) mask |= std::uint64_t{1} << (next + i);
    part_masks.push_back(mask);
    next += size;
  }
  const std::uint64_t all = VertexSet::range(n).bits();
  for (std::uint64_t mask : part_masks) {
    for (Vertex v : VertexSet(mask)) rows[v] = all & ~mask;
  }
  return Graph::from_rows(n, rows);
}

Graph book(int q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "book needs at least one page");
  return join(complete_graph(2), empty_graph(q));
}

Graph theta(std::span<const int> lengths) {
  if (lengths.size() < 2) throw Error(ErrorKind::InvalidArgument, "theta needs at least two paths");
  if (!std::is_sorted(lengths.begin(), lengths.end())) {
    throw Error(ErrorKind::InvalidArgument, "theta path lengths must be sorted ascending");
  }
  if (lengths[0] < 1) throw Error(ErrorKind::InvalidArgument, "theta path lengths must be positive");
  if (lengths[1] < 2) {
    throw Error(ErrorKind::InvalidArgument, "theta allows at most one path of length 1 (l2 >= 2)");
  }
  int n = 2;
  for (int len : lengths) n += len - 1;
  check_order(n);
  std::vector<Edge> edges;
  Vertex next = 2;
  for (int len : lengths) {
    Vertex prev = 0;
    for (int step = 1; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::from_edge_list(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  check_order(n);
  const int shift = g.order();
  const std::uint64_t g_all = g.vertices().bits();
  const std::uint64_t h_all = h.vertices().bits() << shift;
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v) | h_all;
  for (int v = 0; v < h.order(); ++v) rows[shift + v] = (h.row(v) << shift) | g_all;
  return Graph::from_rows(n, rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  check_order(n);
  const int shift = g.order();
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  for (int v = 0; v < h.order(); ++v) rows[shift + v] = h.row(v) << shift;
  return Graph::from_rows(n, rows);
}

Graph basic(BasicKind kind, int n) {
  check_order(n);
  std::vector<Edge> edges;
  switch (kind) {
    case BasicKind::Path:
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case BasicKind::Cycle:
      if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
      for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case BasicKind::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case BasicKind::Empty:
      break;
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidArgument, "complete_bipartite needs nonempty parts");
  return join(empty_graph(a), empty_graph(b));
}

Graph petersen() {
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph clique_join_independent(int n, int k) {
  check_order(n);
  if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "S_{n,k} needs 1 <= k < n");
  return join(complete_graph(k), empty_graph(n - k));
}

// ---- canonical form ----

namespace {

// Branch and bound over relabelings. Column j of the upper triangle holds the
// bits (0,j),(1,j),...,(j-1,j); the first of them is the most significant, so
// comparing columns as integers in order is the lexicographic comparison of
// the whole bit string.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    if (n_ == 1) return {0};
    std::vector<Vertex> order(n_);
    std::uint64_t all = g_.vertices().bits();
    // Position 0 carries no bits of its own; every choice is a candidate, up to twins.
    std::uint64_t tried = 0;
    for (Vertex v : VertexSet(all)) {
      if (twin_of_tried(v, tried)) continue;
      tried |= std::uint64_t{1} << v;
      order[0] = v;
      descend(order, 1, all & ~(std::uint64_t{1} << v), false);
    }
    return best_order_;
  }

 private:
  const Graph& g_;
  int n_;
  std::vector<Vertex> best_order_;
  std::array<std::uint64_t, kMaxOrder> best_cols_{};
  std::array<std::uint64_t, kMaxOrder> cur_cols_{};

  std::uint64_t column(const std::vector<Vertex>& order, int pos, Vertex v) const {
    std::uint64_t col = 0;
    for (int i = 0; i < pos; ++i) col = (col << 1) | (g_.adjacent(order[i], v) ? 1U : 0U);
    return col;
  }

  // Two unplaced vertices u, v with N(u)\{v} == N(v)\{u} are swapped by an
  // automorphism fixing every placed vertex, so only one needs exploring.
  bool twin_of_tried(Vertex v, std::uint64_t tried) const {
    for (Vertex u : VertexSet(tried)) {
      const std::uint64_t mu = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      if ((g_.row(u) & mu) == (g_.row(v) & mu)) return true;
    }
    return false;
  }

  void descend(std::vector<Vertex>& order, int pos, std::uint64_t remaining, bool already_less) {
    if (pos == n_) {
      if (best_order_.empty() || already_less) {
        best_order_ = order;
        best_cols_ = cur_cols_;
      }
      return;
    }
    std::uint64_t min_col = ~std::uint64_t{0};
    for (Vertex v : VertexSet(remaining)) min_col = std::min(min_col, column(order, pos, v));

    bool less = already_less;
    if (!best_order_.empty() && !already_less) {
      if (min_col > best_cols_[pos]) return;
      less = min_col < best_cols_[pos];
    }
    cur_cols_[pos] = min_col;
    std::uint64_t tried = 0;
    for (Vertex v : VertexSet(remaining)) {
      if (column(order, pos, v) != min_col) continue;
      if (twin_of_tried(v, tried)) continue;
      tried |= std::uint64_t{1} << v;
      order[pos] = v;
      descend(order, pos + 1, remaining & ~(std::uint64_t{1} << v), less);
      // The first completed branch becomes the bound; later siblings compare equal so far.
      less = false;
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw Error(ErrorKind::OrderCap, "canonical_form supports n <= " + std::to_string(kCanonicalMaxOrder));
  }
  std::vector<Vertex> order = Canonicalizer(g).run();
  return g.relabeled(order);
}

CanonicalCode canonical_form(const Graph& g) { return CanonicalCode{write_graph6(canonical_graph(g))}; }

}  // namespace critedge
