#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "critedge/graph.hpp"
#include "critedge/spectral.hpp"
#include "oracles.hpp"

using namespace critedge;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1U) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

bool symmetric_loopless(const Graph& g) {
  for (int i = 0; i < g.order(); ++i) {
    if (g.adjacent(i, i)) return false;
    for (int j = 0; j < g.order(); ++j)
      if (g.adjacent(i, j) != g.adjacent(j, i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("from_edge_list") {
  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.size() == 3);
  CHECK(k3 == complete_graph(3));
  CHECK(Graph::from_edge_list(4, {}).size() == 0);
  CHECK(Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 2}}).size() == 2);

  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  CHECK(kind_of([] { Graph::from_edge_list(3, {{0, 3}}); }) == ErrorKind::InvalidVertex);
  CHECK(kind_of([] { Graph::from_edge_list(3, {{-1, 0}}); }) == ErrorKind::InvalidVertex);
  CHECK(kind_of([] { Graph::from_edge_list(3, {{1, 1}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { Graph g(63); }) == ErrorKind::OrderCap);
  CHECK(kind_of([] { Graph g(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("from_rows rejects asymmetric input") {
  const std::vector<std::uint64_t> bad{0b10, 0b000, 0b000};
  CHECK_THROWS_AS(Graph::from_rows(3, bad), Error);
  const std::vector<std::uint64_t> loop{0b01, 0, 0};
  CHECK_THROWS_AS(Graph::from_rows(3, loop), Error);
  const std::vector<std::uint64_t> ok{0b110, 0b101, 0b011};
  CHECK(Graph::from_rows(3, ok) == complete_graph(3));
}

TEST_CASE("common_neighbors") {
  CHECK(common_neighbors(complete_graph(4), 0, 1) == VertexSet{2, 3});
  const Graph c5 = cycle_graph(5);
  for (auto [u, v] : c5.edges()) CHECK(common_neighbors(c5, u, v).empty());
  CHECK(common_neighbors(complete_bipartite(2, 3), 0, 1) == VertexSet{2, 3, 4});
  CHECK_THROWS_AS(common_neighbors(c5, 0, 5), Error);
}

TEST_CASE("is_turan") {
  CHECK(is_turan(complete_bipartite(3, 4), 2));
  CHECK_FALSE(is_turan(complete_bipartite(2, 5), 2));
  CHECK_FALSE(is_turan(cycle_graph(5), 2));
  CHECK(is_turan(complete_graph(5), 5));
  CHECK(is_turan(empty_graph(4), 1));
  CHECK_FALSE(is_turan(empty_graph(4), 2));
  CHECK_FALSE(is_turan(complete_bipartite(3, 3).without_edge(0, 3), 2));
}

TEST_CASE("is_turan agrees with the relabeling oracle on small graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, rng);
    if (trial % 3 == 0) {
      // Shuffle a genuine Turán graph so that positives are exercised too.
      const int k = 1 + static_cast<int>(rng() % n);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      g = turan(n, k).relabeled(perm);
    }
    for (int k = 1; k <= n; ++k) CHECK(is_turan(g, k) == oracle::turan_shape(g, k));
  }
}

TEST_CASE("turan") {
  const Graph t72 = turan(7, 2);
  CHECK(t72.size() == 12);
  CHECK(oracle::canonical(t72) == oracle::canonical(complete_bipartite(3, 4)));
  CHECK(turan(10, 3).size() == 33);
  CHECK(turan(5, 5) == complete_graph(5));
  CHECK_THROWS_AS(turan(3, 4), Error);
  CHECK_THROWS_AS(turan(3, 0), Error);
  CHECK_THROWS_AS(turan(63, 2), Error);

  for (int n = 2; n <= 62; ++n) CHECK(turan(n, 2).size() == n * n / 4);
  for (int n = 1; n <= 62; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Graph t = turan(n, k);
      REQUIRE(t.size() == turan_edge_count(n, k));
      if (n <= 20) CHECK(t.size() == oracle::turan_edges(n, k));
    }
  }
}

TEST_CASE("book, theta, join, basic") {
  CHECK(book(1) == complete_graph(3));
  CHECK(oracle::canonical(book(2)) == oracle::canonical(complete_graph(4).without_edge(2, 3)));
  CHECK(book(3).order() == 5);
  CHECK(book(3).size() == 7);
  CHECK(oracle::booksize(book(3)) == 3);
  CHECK_THROWS_AS(book(0), Error);

  CHECK(oracle::canonical(theta({2, 2})) == oracle::canonical(cycle_graph(4)));
  CHECK(oracle::canonical(theta({1, 2, 2})) == oracle::canonical(book(2)));
  CHECK(theta({1, 2, 3}).order() == 5);
  CHECK(theta({1, 2, 3}).size() == 6);
  CHECK_THROWS_AS(theta({1, 1, 2}), Error);
  CHECK_THROWS_AS(theta({1, 1}), Error);

  CHECK(oracle::canonical(join(complete_graph(2), empty_graph(3))) == oracle::canonical(book(3)));
  const Graph wheel = join(complete_graph(1), cycle_graph(4));
  CHECK(wheel.order() == 5);
  CHECK(wheel.size() == 8);
  const Graph s = join(complete_graph(20), empty_graph(42));
  CHECK(s.size() == 190 + 20 * 42);
  CHECK_THROWS_AS(join(complete_graph(20), empty_graph(80)), Error);
  CHECK(clique_join_independent(100 - 38, 20).size() == 190 + 20 * 42);

  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(4).size() == 3);
  CHECK(complete_graph(4).size() == 6);
  CHECK(empty_graph(4).size() == 0);
  CHECK(petersen().size() == 15);
  CHECK_THROWS_AS(basic(BasicKind::Cycle, 2), Error);
}

TEST_CASE("theta([1,2,l]) carries cycles of lengths 3, l+1, l+2") {
  for (int l = 2; l <= 8; ++l) {
    const Graph t = theta({1, 2, l});
    for (int c : {3, l + 1, l + 2}) CHECK(oracle::subgraph(t, cycle_graph(c)));
  }
}

TEST_CASE("constructors produce symmetric loopless graphs") {
  std::vector<Graph> built{turan(9, 4), book(5), theta({1, 2, 4}), theta({3, 3, 4}), petersen(),
                           complete_bipartite(3, 5), clique_join_independent(12, 3),
                           disjoint_union(cycle_graph(4), complete_graph(3)), join(path_graph(3), cycle_graph(5))};
  for (const Graph& g : built) CHECK(symmetric_loopless(g));
}

TEST_CASE("graph operations") {
  const Graph g = cycle_graph(6);
  CHECK(g.with_edge(0, 3).size() == 7);
  CHECK(g.without_edge(0, 1).size() == 5);
  CHECK(g.edges_within(VertexSet{0, 1, 2}) == 2);
  CHECK(g.edges_between(VertexSet{0, 1, 2}, VertexSet{3, 4, 5}) == 2);
  CHECK(g.induced(VertexSet{0, 1, 2}) == path_graph(3));
  const Graph u = disjoint_union(complete_graph(3), complete_graph(2));
  CHECK(u.components().size() == 2);
  CHECK_FALSE(u.connected());
  CHECK(g.connected());

  const std::vector<Vertex> perm{2, 0, 1};
  const Graph p = path_graph(3).relabeled(perm);
  // vertex v of the result is old vertex perm[v]
  CHECK(p.adjacent(0, 2));
  CHECK(p.adjacent(0, 1) == false);
}

TEST_CASE("canonical_form") {
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(canonical_form(complete_graph(3)) == canonical_form(complete_graph(3).relabeled(perm)));
  const Graph p012 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  const Graph p102 = Graph::from_edge_list(3, {{1, 0}, {0, 2}});
  CHECK(canonical_form(p012) == canonical_form(p102));
  CHECK(canonical_form(complete_graph(3)) != canonical_form(p012));
  CHECK_THROWS_AS(canonical_form(Graph(11)), Error);
}

TEST_CASE("canonical_form is relabeling invariant and matches brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    const CanonicalCode code = canonical_form(g);
    if (trial < 30) CHECK(code.g6 == oracle::canonical(g));
    CHECK(oracle::g6(canonical_graph(g)) == code.g6);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int p = 0; p < 100; ++p) {
      std::shuffle(perm.begin(), perm.end(), rng);
      REQUIRE(canonical_form(g.relabeled(perm)) == code);
    }
  }
}

TEST_CASE("canonical_form at order 10") {
  const Graph pet = petersen();
  std::vector<Vertex> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(5);
  const CanonicalCode code = canonical_form(pet);
  for (int p = 0; p < 10; ++p) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(pet.relabeled(perm)) == code);
  }
  CHECK(canonical_form(turan(10, 2)) == canonical_form(complete_bipartite(5, 5)));
}
