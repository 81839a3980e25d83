#include <doctest.h>

#include <algorithm>
#include <random>

#include "critedge/patterns.hpp"
#include "oracles.hpp"

using namespace critedge;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

std::vector<PatternSpec> small_patterns() {
  return {PatternSpec::book(1),     PatternSpec::book(2),  PatternSpec::book(3),  PatternSpec::theta123(2),
          PatternSpec::theta123(3), PatternSpec::theta123(4), PatternSpec::cycle(3), PatternSpec::cycle(4),
          PatternSpec::cycle(5),    PatternSpec::cycle(6),    PatternSpec::path_on(2), PatternSpec::path_on(4),
          PatternSpec::path_on(6)};
}

void check_witness(const Graph& g, const PatternSpec& p, const PatternWitness& w) {
  const Graph h = p.graph();
  REQUIRE(static_cast<int>(w.vertices.size()) == h.order());
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j)
      if (h.adjacent(i, j)) CHECK(g.adjacent(w.vertices[i], w.vertices[j]));
  CHECK(g.adjacent(w.critical_edge.first, w.critical_edge.second));
}

}  // namespace

TEST_CASE("pattern spec parsing") {
  CHECK(PatternSpec::parse("book:2") == PatternSpec::book(2));
  CHECK(PatternSpec::parse("theta:3") == PatternSpec::theta123(3));
  CHECK(PatternSpec::parse("cycle:5") == PatternSpec::cycle(5));
  CHECK(PatternSpec::parse("path:4") == PatternSpec::path_on(4));
  for (const PatternSpec& p : small_patterns()) CHECK(PatternSpec::parse(p.to_string()) == p);
  for (const char* bad : {"", "book", "book:", "book:x", "Book:2", "book:0", "theta:1", "cycle:2", "path:1",
                          "book:-1", "book:2x", "star:3"}) {
    CHECK_THROWS_AS(PatternSpec::parse(bad), Error);
  }
}

TEST_CASE("pattern graphs and normalization") {
  CHECK(PatternSpec::book(3).order() == 5);
  CHECK(PatternSpec::theta123(4).order() == 6);
  CHECK(PatternSpec::cycle(6).order() == 6);
  CHECK(PatternSpec::path_on(4).order() == 4);
  CHECK(PatternSpec::theta123(2).normalized() == PatternSpec::book(2));
  CHECK(PatternSpec::cycle(3).normalized() == PatternSpec::book(1));
  CHECK(PatternSpec::theta123(3).normalized() == PatternSpec::theta123(3));
  CHECK(oracle::canonical(PatternSpec::theta123(2).graph()) == oracle::canonical(PatternSpec::book(2).graph()));
}

TEST_CASE("booksize") {
  CHECK(booksize(complete_graph(5)) == 3);
  CHECK(booksize(turan(7, 2)) == 0);
  CHECK(booksize(book(4)) == 4);
  CHECK(booksize(petersen()) == 0);
  CHECK(booksize(empty_graph(3)) == 0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 40), 0.5, rng);
    CHECK(booksize(g) == oracle::booksize(g));
  }
}

TEST_CASE("contains matches brute-force embedding on small graphs") {
  std::mt19937_64 rng(17);
  const auto patterns = small_patterns();
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, 0.3 + 0.1 * (trial % 5), rng);
    for (const PatternSpec& p : patterns) {
      const bool expected = oracle::subgraph(g, p.graph());
      REQUIRE(contains(g, p) == expected);
      const auto w = find_pattern(g, p);
      REQUIRE(w.has_value() == expected);
      if (w) check_witness(g, p, *w);
    }
  }
}

TEST_CASE("contains on named graphs") {
  CHECK(contains(book(3), PatternSpec::theta123(2)));
  CHECK_FALSE(contains(turan(10, 2), PatternSpec::book(1)));
  CHECK_FALSE(contains(turan(10, 2), PatternSpec::cycle(5)));
  CHECK(contains(turan(10, 2), PatternSpec::cycle(10)));
  CHECK(contains(turan(10, 2).with_edge(0, 2), PatternSpec::book(5)));
  CHECK(contains(theta({1, 2, 7}), PatternSpec::theta123(7)));
  CHECK_FALSE(contains(theta({1, 2, 7}), PatternSpec::theta123(6)));
  CHECK(contains(petersen(), PatternSpec::cycle(9)));
  CHECK_FALSE(contains(petersen(), PatternSpec::cycle(3)));
  CHECK_FALSE(contains(petersen(), PatternSpec::cycle(4)));
  CHECK(contains(petersen(), PatternSpec::path_on(10)));
  // S_{n,k} has no cycle longer than 2k.
  CHECK(contains(clique_join_independent(12, 3), PatternSpec::cycle(6)));
  CHECK_FALSE(contains(clique_join_independent(12, 3), PatternSpec::cycle(7)));
}

TEST_CASE("containment is monotone under edge addition") {
  std::mt19937_64 rng(23);
  const auto patterns = small_patterns();
  for (int chain = 0; chain < 60; ++chain) {
    const int n = 5 + static_cast<int>(rng() % 4);
    Graph g(n);
    std::vector<Edge> missing;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) missing.emplace_back(i, j);
    std::shuffle(missing.begin(), missing.end(), rng);
    std::vector<bool> had(patterns.size(), false);
    for (auto [u, v] : missing) {
      g = g.with_edge(u, v);
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        const bool now = contains(g, patterns[i]);
        CHECK((!had[i] || now));
        had[i] = now;
      }
    }
  }
}

TEST_CASE("exact length paths") {
  const Graph c6 = cycle_graph(6);
  CHECK(path_exists_exact(c6, 0, 3, 3, {}));
  CHECK_FALSE(path_exists_exact(c6, 0, 3, 2, {}));
  CHECK_FALSE(path_exists_exact(c6, 0, 3, 3, VertexSet{1, 5}));
  const auto p = find_path_exact(c6, 0, 2, 4, {});
  REQUIRE(p.has_value());
  CHECK(p->front() == 0);
  CHECK(p->back() == 2);
  CHECK(p->size() == 5);
  for (std::size_t i = 0; i + 1 < p->size(); ++i) CHECK(c6.adjacent((*p)[i], (*p)[i + 1]));
}

TEST_CASE("longest paths match DFS") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, 0.35, rng);
    CHECK(longest_path_edges(g) == oracle::longest_path(g));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int x = 1 + static_cast<int>(rng() % 4);
    const int y = 1 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (int i = 0; i < x; ++i)
      for (int j = x; j < x + y; ++j)
        if (rng() & 1U) edges.emplace_back(i, j);
    const Graph g = Graph::from_edge_list(x + y, edges);
    const VertexSet xs(VertexSet::range(x));
    CHECK(longest_xx_path_edges(g, xs) == oracle::longest_path(g, [&](int v) { return v < x; }));
  }
  CHECK_THROWS_AS(longest_path_edges(Graph(17)), Error);
}
