#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "critedge/graph.hpp"
#include "critedge/graph6.hpp"
#include "oracles.hpp"

using namespace critedge;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

json strip_elapsed(json j) {
  j.erase("elapsed");
  return j;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("critedge-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void check_envelope(const json& j, const std::string& target) {
  CHECK(j.at("tool_version").is_string());
  CHECK(j.at("target") == target);
  CHECK(j.contains("params"));
  CHECK(j.at("elapsed").is_number());
}

}  // namespace

TEST_CASE("gen output feeds the graph commands") {
  const Outcome gen = run({"gen", "--turan", "7", "2"});
  REQUIRE(gen.code == 0);
  CHECK(gen.out == write_graph6(turan(7, 2)) + "\n");

  const Outcome bs = run({"booksize", "-"}, gen.out);
  CHECK(bs.code == 0);
  const auto docs = lines(bs.out);
  REQUIRE(docs.size() == 1);
  check_envelope(docs[0], "booksize");
  CHECK(docs[0]["booksize"] == 0);

  const Outcome rho = run({"rho", "-"}, gen.out);
  CHECK(rho.code == 0);
  const json r = lines(rho.out).at(0);
  check_envelope(r, "rho");
  CHECK(r["n"] == 7);
  CHECK(r["e"] == 12);
  CHECK(r["rho"]["lower"].get<double>() <= std::sqrt(12.0) + 1e-12);
  CHECK(r["rho"]["upper"].get<double>() >= std::sqrt(12.0) - 1e-12);

  const Outcome book = run({"gen", "--book", "3"});
  const Outcome con = run({"contains", "--pattern", "theta:2", "-"}, book.out);
  CHECK(con.code == 0);
  const json c = lines(con.out).at(0);
  CHECK(c["contains"] == true);
  CHECK(c["witness"]["vertices"].size() == 4);
  const Outcome no = run({"contains", "--pattern", "book:1", write_graph6(cycle_graph(5))});
  CHECK(no.code == 0);
  CHECK(lines(no.out).at(0)["contains"] == false);
}

TEST_CASE("gen variants") {
  CHECK(run({"gen", "--theta", "1,2,3"}).out == write_graph6(theta({1, 2, 3})) + "\n");
  CHECK(run({"gen", "--cycle", "5"}).out == write_graph6(cycle_graph(5)) + "\n");
  CHECK(run({"gen", "--path", "4"}).out == write_graph6(path_graph(4)) + "\n");
  CHECK(run({"gen", "--snk", "10"}).out == write_graph6(clique_join_independent(10, 2)) + "\n");
  CHECK(run({"gen"}).code == 2);
  CHECK(run({"gen", "--cycle", "5", "--path", "4"}).code == 2);
  CHECK(run({"gen", "--theta", "1,2"}).code == 2);
  CHECK(run({"gen", "--turan", "63", "2"}).code == 3);
}

TEST_CASE("multi-graph input yields one document per graph") {
  const std::string input = "Bw\nC~\n\nC?\n";
  const auto docs = lines(run({"booksize", "-"}, input).out);
  REQUIRE(docs.size() == 3);
  CHECK(docs[0]["booksize"] == 1);
  CHECK(docs[1]["booksize"] == 2);
  CHECK(docs[2]["booksize"] == 0);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rho", "--bogus", "Bw"}).code == 2);
  CHECK(run({"rho", "B"}).code == 2);
  const Outcome bad_stdin = run({"rho", "-"}, "Bw\nxx\n");
  CHECK(bad_stdin.code == 2);
  CHECK(bad_stdin.err.find("line 2") != std::string::npos);
  CHECK(run({"rho", "~~~~"}).code == 3);
  CHECK(run({"contains", "--pattern", "star:3", "Bw"}).code == 2);
  CHECK(run({"verify", "--target", "nope", "--n", "5"}).code == 2);
  CHECK(run({"verify", "--target", "gamma"}).code == 2);
  CHECK(run({"verify", "--target", "gamma", "--n", "5", "--r", "2"}).code == 2);
  CHECK(run({"verify", "--target", "erdos-gallai", "--n", "5"}).code == 2);
  CHECK(run({"verify", "--target", "spectral-book", "--n", "5", "--pattern", "theta:3"}).code == 2);
  CHECK(run({"verify", "--target", "gamma", "--n", "9"}).code == 3);
  CHECK(run({"verify", "--target", "edge-book", "--n", "8", "--threads", "1"}).code == 2);
  CHECK(run({"search", "--pattern", "book:2", "--n", "8", "--restarts", "1"}).code == 2);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("verify exit codes") {
  const Outcome holds = run({"verify", "--target", "gamma", "--n", "5", "--threads", "1"});
  CHECK(holds.code == 0);
  const json h = json::parse(holds.out);
  check_envelope(h, "gamma");
  CHECK(h["verdict"] == "holds");
  CHECK(h["params"]["n"] == 5);

  // Report-only probes never fail the run even when they record violations.
  const Outcome probe = run({"verify", "--target", "booksize-cor", "--n", "5", "--divisor", "1", "--threads", "1"});
  CHECK(probe.code == 0);
  CHECK(json::parse(probe.out)["verdict"] == "violated");

  // Streams let scans reach orders beyond enumeration.
  const std::string corpus = write_graph6(complete_bipartite(3, 4).with_edge(0, 1)) + "\n" +
                             write_graph6(turan(12, 2)) + "\n";
  const Outcome streamed = run({"verify", "--target", "edge-book", "--stream", "-"}, corpus);
  CHECK(streamed.code == 0);
  CHECK(json::parse(streamed.out)["scanned"] == 2);
}

TEST_CASE("repeated runs differ only in elapsed") {
  const std::vector<std::string> args{"verify", "--target", "edge-book", "--n", "5", "--threads", "1"};
  json a = json::parse(run(args).out);
  json b = json::parse(run(args).out);
  CHECK(strip_elapsed(a) == strip_elapsed(b));
  const std::vector<std::string> search{"search", "--pattern", "book:2", "--n", "8", "--restarts", "3", "--seed", "9"};
  CHECK(strip_elapsed(json::parse(run(search).out)) == strip_elapsed(json::parse(run(search).out)));
}

TEST_CASE("sharded runs merge to the unsharded report") {
  TempDir dir;
  const std::vector<std::string> base{"verify", "--target", "booksize-cor", "--n", "6", "--threads", "1"};
  const json whole = strip_elapsed(json::parse(run(base).out));
  std::vector<std::string> merge_args{"verify", "--merge"};
  for (int i = 0; i < 3; ++i) {
    const std::string path = dir.file("part" + std::to_string(i) + ".json");
    std::vector<std::string> args = base;
    for (const std::string& s : {std::string("--shards"), std::string("3"), std::string("--shard"),
                                 std::to_string(i), std::string("--json"), path})
      args.push_back(s);
    CHECK(run(args).code == 0);
    merge_args.push_back(path);
  }
  merge_args.push_back("--csv");
  merge_args.push_back(dir.file("summary.csv"));
  const Outcome merged = run(merge_args);
  CHECK(merged.code == 0);
  CHECK(strip_elapsed(json::parse(merged.out)) == whole);
  std::ifstream csv(dir.file("summary.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header.starts_with("target,verdict"));
  CHECK(run({"verify", "--merge", dir.file("part0.json"), "--n", "6"}).code == 2);
}

TEST_CASE("search command") {
  const Outcome s = run({"search", "--pattern", "book:2", "--n", "10", "--restarts", "4", "--seed", "42", "--threads", "1"});
  CHECK(s.code == 0);
  const json j = json::parse(s.out);
  check_envelope(j, "search");
  CHECK(j["label"] == "heuristic probe");
  CHECK(j["params"]["seed"] == 42);
  const Graph best = parse_graph6(j["best"]["g6"].get<std::string>());
  CHECK_FALSE(oracle::subgraph(best, book(2)));
  const Outcome capped =
      run({"search", "--pattern", "book:2", "--n", "10", "--restarts", "1", "--seed", "1", "--budget", "1"});
  CHECK(capped.code == 3);
}

TEST_CASE("convert --check") {
  TempDir dir;
  const std::string path = dir.file("corpus.g6");
  std::ofstream(path) << "Bw\nC~\nC\n\n>>graph6<<C?\n:sparse\n";
  const Outcome bad = run({"convert", "--check", path});
  CHECK(bad.code == 2);
  const json j = json::parse(bad.out);
  check_envelope(j, "convert");
  CHECK(j["records"] == 3);
  CHECK(j["malformed"] == 2);
  CHECK(j["diagnostics"][0]["line"] == 3);
  CHECK(j["diagnostics"][1]["line"] == 6);
  CHECK(bad.err.find("line 3: ") != std::string::npos);
  CHECK(run({"convert", "--check", "-"}, "Bw\nC~\n").code == 0);
  CHECK(run({"convert", "--check", dir.file("missing.g6")}).code == 2);
}
