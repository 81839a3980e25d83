#include <doctest.h>

#include <sstream>

#include "critedge/enumerate.hpp"
#include "critedge/graph6.hpp"
#include "oracles.hpp"

using namespace critedge;

namespace {

ErrorKind parse_error(std::string_view s) {
  try {
    parse_graph6(s);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error for '" << std::string(s) << "'");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("fixed vectors") {
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6("C?") == empty_graph(4));
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(empty_graph(4)) == "C?");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  CHECK(parse_graph6("Bw\r") == complete_graph(3));
  CHECK(write_graph6(petersen()) == oracle::g6(petersen()));
}

TEST_CASE("round trip on every labeled graph up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t m = 0; m < total; ++m) {
      const Graph g = Graph::from_upper_mask(n, m);
      const std::string s = write_graph6(g);
      REQUIRE(s == oracle::g6(g));
      REQUIRE(parse_graph6(s) == g);
    }
  }
}

TEST_CASE("round trip at larger orders") {
  for (const Graph& g : {turan(62, 3), clique_join_independent(40, 9), theta({5, 7, 9}), petersen()}) {
    CHECK(write_graph6(g) == oracle::g6(g));
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("malformed records") {
  CHECK(parse_error("") == ErrorKind::TruncatedRecord);
  CHECK(parse_error("?") == ErrorKind::BadHeader);
  CHECK(parse_error(" ") == ErrorKind::BadHeader);
  CHECK(parse_error("~~~~") == ErrorKind::OrderCap);
  CHECK(parse_error("C") == ErrorKind::TruncatedRecord);
  CHECK(parse_error("C~~") == ErrorKind::TrailingData);
  CHECK(parse_error("C ") == ErrorKind::InvalidByte);
  // K4 needs 6 bits, so a 3-vertex graph has 3 padding bits.
  CHECK(parse_error("B@") == ErrorKind::NonzeroPadding);
  CHECK(parse_error(":Bw") == ErrorKind::UnsupportedFormat);
  CHECK(parse_error("&Bw") == ErrorKind::UnsupportedFormat);
}

TEST_CASE("reader keeps diagnostics and line numbers") {
  std::istringstream in("Bw\n\nC~\nxyz\nC\r\nC?\n");
  Graph6Reader reader(in);
  std::vector<std::size_t> origins;
  while (auto rec = reader.next_record()) origins.push_back(rec->first.origin);
  CHECK(origins == std::vector<std::size_t>{1, 3, 6});
  REQUIRE(reader.diagnostics().size() == 2);
  CHECK(reader.diagnostics()[0].line == 4);
  CHECK(reader.diagnostics()[1].line == 5);
  CHECK(reader.lines_read() == 6);

  std::istringstream again("Bw\nbad\n");
  std::vector<Diagnostic> diags;
  CHECK(read_graph6_all(again, &diags).size() == 1);
  CHECK(diags.size() == 1);
  CHECK_THROWS_AS(Graph6Reader::open("/nonexistent/file.g6"), Error);
}

TEST_CASE("canonical dedup counts") {
  const std::vector<int> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    LabeledEnumerator it({n, EnumerationMode::CanonicalDeduped});
    int count = 0;
    while (it.next()) ++count;
    CHECK(count == expected[n - 1]);
  }
}
