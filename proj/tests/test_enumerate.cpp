#include <doctest.h>

#include <set>

#include "critedge/enumerate.hpp"
#include "critedge/graph6.hpp"
#include "oracles.hpp"

using namespace critedge;

TEST_CASE("upper mask follows the graph6 bit order") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t m = 0; m < total; ++m) {
      std::vector<Edge> edges;
      int bit = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
          if ((m >> bit) & 1U) edges.emplace_back(i, j);
      REQUIRE(Graph::from_upper_mask(n, m) == Graph::from_edge_list(n, edges));
    }
  }
}

TEST_CASE("labeled enumeration visits every mask once") {
  const int n = 5;
  LabeledEnumerator all({n});
  std::set<std::string> seen;
  int count = 0;
  while (auto g = all.next()) {
    seen.insert(write_graph6(*g));
    ++count;
  }
  CHECK(count == 1024);
  CHECK(seen.size() == 1024);
}

TEST_CASE("labeled shards partition the masks") {
  const int n = 5;
  std::multiset<std::string> union_of_shards;
  for (std::uint64_t s = 0; s < 7; ++s) {
    LabeledEnumerator it({n, EnumerationMode::Labeled, 7, s});
    while (auto g = it.next()) union_of_shards.insert(write_graph6(*g));
  }
  CHECK(union_of_shards.size() == 1024);
  CHECK(std::set<std::string>(union_of_shards.begin(), union_of_shards.end()).size() == 1024);

  std::uint64_t visited = 0;
  LabeledEnumerator::for_each_mask({n, EnumerationMode::Labeled, 3, 2}, [&](std::uint64_t m) {
    CHECK(m % 3 == 2);
    ++visited;
    return true;
  });
  CHECK(visited == 341);
}

TEST_CASE("canonical shards are disjoint and cover all classes") {
  const int n = 5;
  std::multiset<std::string> classes;
  for (std::uint64_t s = 0; s < 4; ++s) {
    LabeledEnumerator it({n, EnumerationMode::CanonicalDeduped, 4, s});
    while (auto g = it.next()) {
      classes.insert(write_graph6(*g));
      CHECK(write_graph6(*g) == oracle::canonical(*g));
    }
  }
  CHECK(classes.size() == 34);
  CHECK(std::set<std::string>(classes.begin(), classes.end()).size() == 34);
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(LabeledEnumerator({0}), Error);
  CHECK_THROWS_AS(LabeledEnumerator({9}), Error);
  CHECK_THROWS_AS(LabeledEnumerator({4, EnumerationMode::Labeled, 0, 0}), Error);
  CHECK_THROWS_AS(LabeledEnumerator({4, EnumerationMode::Labeled, 2, 2}), Error);
  CHECK_THROWS_AS(
      LabeledEnumerator::for_each_mask({4, EnumerationMode::CanonicalDeduped}, [](std::uint64_t) { return true; }),
      Error);
}

TEST_CASE("stable_hash is FNV-1a") {
  CHECK(stable_hash("") == 14695981039346656037ULL);
  CHECK(stable_hash("a") == 0xaf63dc4c8601ec8cULL);
}
