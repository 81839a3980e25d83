#include "critedge/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>

namespace critedge {

namespace {

int parse_positive(std::string_view digits, std::string_view text) {
  int value = 0;
  const char* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::InvalidArgument, "malformed pattern '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

PatternSpec PatternSpec::book(int q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "Book(q) requires q >= 1");
  return {Kind::Book, q};
}

PatternSpec PatternSpec::theta123(int l) {
  if (l < 2) throw Error(ErrorKind::InvalidArgument, "Theta123(l) requires l >= 2");
  return {Kind::Theta123, l};
}

PatternSpec PatternSpec::cycle(int t) {
  if (t < 3) throw Error(ErrorKind::InvalidArgument, "Cycle(t) requires t >= 3");
  return {Kind::Cycle, t};
}

PatternSpec PatternSpec::path_on(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "PathOnK(k) requires k >= 2");
  return {Kind::PathOnK, k};
}

PatternSpec PatternSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument, "pattern '" + std::string(text) + "' must look like name:N");
  }
  const std::string_view name = text.substr(0, colon);
  const int value = parse_positive(text.substr(colon + 1), text);
  if (name == "book") return book(value);
  if (name == "theta") return theta123(value);
  if (name == "cycle") return cycle(value);
  if (name == "path") return path_on(value);
  throw Error(ErrorKind::InvalidArgument, "unknown pattern kind '" + std::string(name) + "'");
}

std::string PatternSpec::to_string() const {
  switch (kind) {
    case Kind::Book: return "book:" + std::to_string(param);
    case Kind::Theta123: return "theta:" + std::to_string(param);
    case Kind::Cycle: return "cycle:" + std::to_string(param);
    case Kind::PathOnK: return "path:" + std::to_string(param);
  }
  return {};
}

int PatternSpec::order() const {
  switch (kind) {
    case Kind::Book: return param + 2;
    case Kind::Theta123: return param + 2;
    case Kind::Cycle: return param;
    case Kind::PathOnK: return param;
  }
  return 0;
}

Graph PatternSpec::graph() const {
  switch (kind) {
    case Kind::Book: return critedge::book(param);
    case Kind::Theta123: return theta({1, 2, param});
    case Kind::Cycle: return cycle_graph(param);
    case Kind::PathOnK: return path_graph(param);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pattern kind");
}

PatternSpec PatternSpec::normalized() const {
  if (kind == Kind::Theta123 && param == 2) return book(2);
  if (kind == Kind::Cycle && param == 3) return book(1);
  return *this;
}

int booksize(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.order(); ++u) {
    const std::uint64_t above = g.row(u) & ~VertexSet::range(u + 1).bits();
    for (Vertex v : VertexSet(above)) best = std::max(best, std::popcount(g.row(u) & g.row(v)));
  }
  return best;
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex target, std::uint64_t blocked)
      : g_(g), target_(target), blocked_(blocked | (std::uint64_t{1} << target)) {}

  // Extends path_ (ending at its last vertex) by exactly `remaining` edges to target_.
  bool extend(int remaining, std::uint64_t visited) {
    const Vertex cur = path_.back();
    if (remaining == 1) {
      if (!g_.adjacent(cur, target_)) return false;
      path_.push_back(target_);
      return true;
    }
    const std::uint64_t available = g_.vertices().bits() & ~visited & ~blocked_;
    if (std::popcount(available) < remaining - 1) return false;
    for (Vertex w : VertexSet(g_.row(cur) & available)) {
      path_.push_back(w);
      if (extend(remaining - 1, visited | (std::uint64_t{1} << w))) return true;
      path_.pop_back();
    }
    return false;
  }

  std::vector<Vertex> path_;

 private:
  const Graph& g_;
  Vertex target_;
  std::uint64_t blocked_;
};

// Any simple path with exactly `edges` edges starting at `start`.
bool extend_free_path(const Graph& g, std::vector<Vertex>& path, int remaining, std::uint64_t visited) {
  if (remaining == 0) return true;
  const std::uint64_t available = g.vertices().bits() & ~visited;
  if (std::popcount(available) < remaining) return false;
  for (Vertex w : VertexSet(g.row(path.back()) & available)) {
    path.push_back(w);
    if (extend_free_path(g, path, remaining - 1, visited | (std::uint64_t{1} << w))) return true;
    path.pop_back();
  }
  return false;
}

void check_pair(const Graph& g, Vertex u, Vertex v, VertexSet excluded) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw Error(ErrorKind::InvalidVertex, "path endpoint out of range");
  }
  if (u == v) throw Error(ErrorKind::InvalidVertex, "path endpoints must be distinct");
  if (excluded.contains(u) || excluded.contains(v)) {
    throw Error(ErrorKind::InvalidVertex, "path endpoints must not be excluded");
  }
}

}  // namespace

std::optional<std::vector<Vertex>> find_path_exact(const Graph& g, Vertex u, Vertex v, int len,
                                                   VertexSet excluded) {
  check_pair(g, u, v, excluded);
  if (len < 1) return std::nullopt;
  PathSearch search(g, v, excluded.bits());
  search.path_.push_back(u);
  if (search.extend(len, std::uint64_t{1} << u)) return std::move(search.path_);
  return std::nullopt;
}

bool path_exists_exact(const Graph& g, Vertex u, Vertex v, int len, VertexSet excluded) {
  return find_path_exact(g, u, v, len, excluded).has_value();
}

std::optional<PatternWitness> find_pattern(const Graph& g, const PatternSpec& spec) {
  const PatternSpec p = spec.normalized();
  if (p.order() > g.order()) return std::nullopt;
  const auto edges = g.edges();
  switch (p.kind) {
    case PatternSpec::Kind::Book:
      for (auto [u, v] : edges) {
        const VertexSet common = common_neighbors(g, u, v);
        if (common.size() < p.param) continue;
        PatternWitness w{{u, v}, {u, v}};
        for (Vertex page : common) {
          if (static_cast<int>(w.vertices.size()) == p.param + 2) break;
          w.vertices.push_back(page);
        }
        return w;
      }
      return std::nullopt;
    case PatternSpec::Kind::Theta123:
      for (auto [u, v] : edges) {
        for (Vertex w : common_neighbors(g, u, v)) {
          if (auto path = find_path_exact(g, u, v, p.param, VertexSet::single(w))) {
            PatternWitness out{{u, v, w}, {u, v}};
            out.vertices.insert(out.vertices.end(), path->begin() + 1, path->end() - 1);
            return out;
          }
        }
      }
      return std::nullopt;
    case PatternSpec::Kind::Cycle:
      for (auto [u, v] : edges) {
        if (auto path = find_path_exact(g, u, v, p.param - 1, VertexSet())) {
          return PatternWitness{std::move(*path), {u, v}};
        }
      }
      return std::nullopt;
    case PatternSpec::Kind::PathOnK:
      for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<Vertex> path{s};
        if (extend_free_path(g, path, p.param - 1, std::uint64_t{1} << s)) {
          const Edge first{std::min(path[0], path[1]), std::max(path[0], path[1])};
          return PatternWitness{std::move(path), first};
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

bool contains(const Graph& g, const PatternSpec& spec) {
  const PatternSpec p = spec.normalized();
  if (p.kind == PatternSpec::Kind::Book) return booksize(g) >= p.param;
  return find_pattern(g, p).has_value();
}

namespace {

// dp[mask] holds the possible end vertices of simple paths that start in
// `starts` and visit exactly `mask`.
int longest_path_dp(const Graph& g, std::uint64_t starts, std::uint64_t ends_of_interest) {
  const int n = g.order();
  if (n > kLongestPathMaxOrder) {
    throw Error(ErrorKind::OrderCap, "exhaustive longest path supports n <= " +
                                         std::to_string(kLongestPathMaxOrder));
  }
  std::vector<std::uint16_t> dp(std::size_t{1} << n, 0);
  for (Vertex v : VertexSet(starts)) dp[std::size_t{1} << v] = static_cast<std::uint16_t>(1U << v);
  int best = 0;
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const std::uint16_t ends = dp[mask];
    if (!ends) continue;
    if (ends & ends_of_interest) best = std::max(best, std::popcount(mask) - 1);
    for (Vertex v : VertexSet(ends)) {
      for (Vertex w : VertexSet(g.row(v) & ~static_cast<std::uint64_t>(mask))) {
        dp[mask | (std::size_t{1} << w)] |= static_cast<std::uint16_t>(1U << w);
      }
    }
  }
  return best;
}

}  // namespace

int longest_path_edges(const Graph& g) {
  const std::uint64_t all = g.vertices().bits();
  return longest_path_dp(g, all, all);
}

int longest_xx_path_edges(const Graph& g, VertexSet x) {
  const VertexSet all = g.vertices();
  if (!(x - all).empty()) throw Error(ErrorKind::InvalidVertex, "X contains vertices outside the graph");
  const VertexSet y = all - x;
  if (g.edges_within(x) != 0 || g.edges_within(y) != 0) {
    throw Error(ErrorKind::NotBipartiteWithGivenParts, "X and V\\X must both be independent");
  }
  if (g.order() > kLongestPathMaxOrder) {
    throw Error(ErrorKind::OrderCap, "exhaustive longest path supports n <= " +
                                         std::to_string(kLongestPathMaxOrder));
  }
  return longest_path_dp(g, x.bits(), x.bits());
}

}  // namespace critedge
