#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "critedge/graph.hpp"
#include "critedge/graph6.hpp"
#include "critedge/patterns.hpp"
#include "critedge/report.hpp"
#include "critedge/search.hpp"
#include "critedge/spectral.hpp"
#include "critedge/verify.hpp"
#include "critedge/version.hpp"

namespace critedge::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A positional graph argument: one graph6 string, or "-" for every record on stdin.
std::vector<Graph> read_graphs(const std::string& arg, std::istream& in, std::ostream& err) {
  if (arg != "-") return {parse_graph6(arg)};
  std::vector<Diagnostic> diagnostics;
  std::vector<Graph> graphs = read_graph6_all(in, &diagnostics);
  for (const auto& d : diagnostics) err << "line " << d.line << ": " << d.reason << '\n';
  if (!diagnostics.empty()) throw Error(ErrorKind::InvalidArgument, "malformed graph6 input");
  if (graphs.empty()) throw UsageError("no graph on standard input");
  return graphs;
}

json envelope(std::string_view target, json params, Clock::time_point start) {
  json j;
  j["tool_version"] = kToolVersion;
  j["target"] = std::string(target);
  j["params"] = std::move(params);
  j["elapsed"] = seconds_since(start);
  return j;
}

// ---- rho / booksize / contains ----

struct GraphCommand {
  std::string input;
  double tol = kDefaultTolerance;
  std::string pattern;
};

int run_rho(const GraphCommand& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  for (const Graph& g : read_graphs(c.input, in, err)) {
    const SpectralEstimate est = g.size() == 0 ? SpectralEstimate{} : spectral_radius(g, c.tol);
    json j = envelope("rho", {{"tol", c.tol}}, start);
    j["g6"] = write_graph6(g);
    j["n"] = g.order();
    j["e"] = g.size();
    j["rho"] = {{"value", est.value}, {"lower", est.lower}, {"upper", est.upper}};
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int run_booksize(const GraphCommand& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  for (const Graph& g : read_graphs(c.input, in, err)) {
    json j = envelope("booksize", json::object(), start);
    j["g6"] = write_graph6(g);
    j["booksize"] = booksize(g);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int run_contains(const GraphCommand& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const PatternSpec p = PatternSpec::parse(c.pattern);
  for (const Graph& g : read_graphs(c.input, in, err)) {
    json j = envelope("contains", {{"pattern", p.to_string()}}, start);
    j["g6"] = write_graph6(g);
    j["pattern"] = p.to_string();
    const auto w = find_pattern(g, p);
    j["contains"] = w.has_value();
    if (w) {
      j["witness"] = {{"vertices", w->vertices},
                      {"critical_edge", {w->critical_edge.first, w->critical_edge.second}}};
    }
    out << j.dump() << '\n';
  }
  return kExitOk;
}

// ---- gen ----

struct GenCommand {
  std::vector<int> turan;
  int book = 0;
  std::vector<int> theta;
  int snk = 0;
  int cycle = 0;
  int path = 0;
};

int run_gen(const GenCommand& c, const CLI::App& sub, std::ostream& out) {
  int chosen = 0;
  for (const char* name : {"--turan", "--book", "--theta", "--snk", "--cycle", "--path"}) {
    chosen += sub.count(name) > 0 ? 1 : 0;
  }
  if (chosen != 1) throw UsageError("gen takes exactly one of --turan, --book, --theta, --snk, --cycle, --path");
  Graph g(1);
  if (sub.count("--turan")) {
    g = turan(c.turan.at(0), c.turan.at(1));
  } else if (sub.count("--book")) {
    g = book(c.book);
  } else if (sub.count("--theta")) {
    if (c.theta.size() != 3) throw UsageError("--theta takes three comma-separated lengths");
    g = theta(c.theta);
  } else if (sub.count("--snk")) {
    g = clique_join_independent(c.snk, snk_clique_size(c.snk));
  } else if (sub.count("--cycle")) {
    if (c.cycle < 3) throw Error(ErrorKind::InvalidArgument, "--cycle needs T >= 3");
    g = cycle_graph(c.cycle);
  } else {
    g = path_graph(c.path);
  }
  out << write_graph6(g) << '\n';
  return kExitOk;
}

// ---- verify ----

struct VerifyCommand {
  std::string target;
  int n = 0;
  int r = 0;
  int k = 0;
  double divisor = 6.5;
  int x_max = 0;
  int y_max = 0;
  std::string pattern;
  bool assert_rho = false;
  std::string stream;
  std::uint64_t shards = 1;
  std::uint64_t shard = 0;
  unsigned threads = 0;
  std::string json_path;
  std::string csv_path;
  bool no_prefilter = false;
  double tol = kDefaultTolerance;
  std::int64_t max_iterations = kDefaultIterationBudget;
  std::size_t witness_cap = kDefaultWitnessCap;
  std::vector<std::string> merge;
};

struct TargetFlags {
  std::set<std::string> required;
  std::set<std::string> optional;
};

const std::map<std::string, TargetFlags, std::less<>>& target_flags() {
  static const std::map<std::string, TargetFlags, std::less<>> flags = {
      {std::string(kTargetSpectralBook), {{}, {"--n", "--r", "--pattern", "--stream"}}},
      {std::string(kTargetSpectralTheta), {{}, {"--n", "--r", "--pattern", "--stream"}}},
      {std::string(kTargetBooksizeCorollary), {{}, {"--n", "--divisor", "--stream"}}},
      {std::string(kTargetCycleCorollary), {{}, {"--n", "--stream"}}},
      {std::string(kTargetEdgeBook), {{}, {"--n", "--stream"}}},
      {std::string(kTargetErdosGallai), {{"--r"}, {"--n", "--stream"}}},
      {std::string(kTargetBipartitePath), {{"--r", "--x-max", "--y-max"}, {}}},
      {std::string(kTargetGamma), {{}, {"--n", "--stream"}}},
      {std::string(kTargetFactChain), {{"--k", "--n"}, {}}},
      {std::string(kTargetTuranNumber), {{"--pattern"}, {"--n", "--stream"}}},
      {std::string(kTargetSnk), {{"--n"}, {"--assert-rho"}}},
  };
  return flags;
}

const std::set<std::string> kScanFlags = {"--shards", "--shard",     "--threads",        "--json",
                                          "--csv",    "--no-prefilter", "--tol", "--max-iterations",
                                          "--witness-cap"};
const std::set<std::string> kTargetedFlags = {"--n",       "--r",       "--k",      "--divisor", "--x-max",
                                              "--y-max",   "--pattern", "--assert-rho", "--stream"};

void check_verify_flags(const VerifyCommand& c, const CLI::App& sub) {
  auto it = target_flags().find(c.target);
  if (it == target_flags().end()) {
    std::string known;
    for (auto t : verify_targets()) known += (known.empty() ? "" : ", ") + std::string(t);
    throw UsageError("unknown target '" + c.target + "' (expected one of " + known + ")");
  }
  const TargetFlags& f = it->second;
  for (const auto& name : kTargetedFlags) {
    if (sub.count(name) && !f.required.count(name) && !f.optional.count(name)) {
      throw UsageError(name + " is not used by target '" + c.target + "'");
    }
  }
  for (const auto& name : f.required) {
    if (!sub.count(name)) throw UsageError("target '" + c.target + "' requires " + name);
  }
  const bool streamed = sub.count("--stream") > 0;
  const bool needs_n = f.optional.count("--n") && !f.required.count("--n");
  if (needs_n && !streamed && !sub.count("--n")) throw UsageError("target '" + c.target + "' requires --n or --stream");
  if (needs_n && streamed && sub.count("--n")) throw UsageError("--n and --stream are mutually exclusive");
  if (c.target == kTargetSnk && (sub.count("--shards") || sub.count("--shard"))) {
    throw UsageError("target 'snk' is a single construction and cannot be sharded");
  }
  if (sub.count("--shard") && !sub.count("--shards")) throw UsageError("--shard requires --shards");
}

PatternSpec spectral_pattern(const VerifyCommand& c, const CLI::App& sub, PatternSpec::Kind kind) {
  if (sub.count("--r") && sub.count("--pattern")) throw UsageError("--r and --pattern are mutually exclusive");
  if (sub.count("--r")) {
    return kind == PatternSpec::Kind::Book ? PatternSpec::book(c.r + 1) : PatternSpec::theta123(c.r + 1);
  }
  if (!sub.count("--pattern")) throw UsageError("target '" + c.target + "' requires --r or --pattern");
  const PatternSpec p = PatternSpec::parse(c.pattern);
  if (p.kind != kind) throw UsageError("--pattern kind does not match target '" + c.target + "'");
  return p;
}

int verdict_exit(const VerificationReport& r) {
  return r.verdict() == Verdict::Violated && !r.report_only ? kExitViolation : kExitOk;
}

void emit_report(const VerificationReport& r, const VerifyCommand& c, std::ostream& out) {
  const std::string text = to_json(r);
  out << text << '\n';
  if (!c.json_path.empty()) write_file(c.json_path, text);
  if (!c.csv_path.empty()) write_file(c.csv_path, csv_header() + "\n" + to_csv_row(r));
}

int run_merge(const VerifyCommand& c, const CLI::App& sub, std::ostream& out) {
  for (const auto* opt : sub.get_options()) {
    const std::string name = opt->get_name();
    if (name == "--merge" || name == "--json" || name == "--csv" || name == "--help") continue;
    if (opt->count() > 0) throw UsageError(name + " cannot be combined with --merge");
  }
  std::optional<VerificationReport> acc;
  for (const auto& path : c.merge) {
    VerificationReport r = report_from_json(read_file(path));
    acc = acc ? merge(*acc, r) : r;
  }
  emit_report(*acc, c, out);
  return verdict_exit(*acc);
}

int run_verify(const VerifyCommand& c, const CLI::App& sub, std::istream& in, std::ostream& out,
               std::ostream& err) {
  if (!c.merge.empty()) return run_merge(c, sub, out);
  if (!sub.count("--target")) throw UsageError("verify requires --target or --merge");
  check_verify_flags(c, sub);

  ScanOptions opts;
  opts.tol = c.tol;
  opts.max_iterations = c.max_iterations;
  opts.shard_count = c.shards;
  opts.shard_index = c.shard;
  opts.threads = sub.count("--threads") ? std::max(1U, c.threads) : default_threads();
  opts.prefilters = !c.no_prefilter;
  opts.witness_cap = c.witness_cap;
  std::vector<Diagnostic> diagnostics;
  std::unique_ptr<std::ifstream> file;
  if (!c.stream.empty()) {
    if (c.stream == "-") {
      opts.stream = &in;
    } else {
      file = std::make_unique<std::ifstream>(c.stream);
      if (!*file) throw Error(ErrorKind::IoError, "cannot open '" + c.stream + "'");
      opts.stream = file.get();
    }
    opts.stream_name = c.stream;
    opts.diagnostics = &diagnostics;
  }

  VerificationReport r;
  const std::string& t = c.target;
  if (t == kTargetSpectralBook) {
    r = verify_spectral_theorem(c.n, spectral_pattern(c, sub, PatternSpec::Kind::Book), opts);
  } else if (t == kTargetSpectralTheta) {
    r = verify_spectral_theorem(c.n, spectral_pattern(c, sub, PatternSpec::Kind::Theta123), opts);
  } else if (t == kTargetBooksizeCorollary) {
    r = verify_booksize_corollary(c.n, c.divisor, opts);
  } else if (t == kTargetCycleCorollary) {
    r = verify_cycle_corollary(c.n, opts);
  } else if (t == kTargetEdgeBook) {
    r = verify_edge_book(c.n, opts);
  } else if (t == kTargetErdosGallai) {
    r = verify_erdos_gallai(c.n, c.r, opts);
  } else if (t == kTargetBipartitePath) {
    r = verify_bipartite_path_lemma(c.x_max, c.y_max, c.r, opts);
  } else if (t == kTargetGamma) {
    r = verify_gamma_bound(c.n, opts);
  } else if (t == kTargetFactChain) {
    r = verify_fact_chain(c.k, c.n, opts);
  } else if (t == kTargetTuranNumber) {
    r = verify_turan_number(c.n, PatternSpec::parse(c.pattern), opts);
  } else {
    r = check_snk(c.n, c.assert_rho, opts);
  }
  for (const auto& d : diagnostics) err << "line " << d.line << ": " << d.reason << '\n';
  emit_report(r, c, out);
  return verdict_exit(r);
}

// ---- search ----

struct SearchCommand {
  std::string pattern;
  int n = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  std::int64_t budget = kDefaultSearchBudget;
  unsigned threads = 0;
  std::string json_path;
};

int run_search(const SearchCommand& c, const CLI::App& sub, std::ostream& out) {
  SearchOptions opts;
  opts.threads = sub.count("--threads") ? std::max(1U, c.threads) : default_threads();
  const SearchResult r = hill_climb(c.n, PatternSpec::parse(c.pattern), c.restarts, c.seed, c.budget, opts);
  const std::string text = to_json(r);
  out << text << '\n';
  if (!c.json_path.empty()) write_file(c.json_path, text);
  return r.budget_exhausted ? kExitResourceCap : kExitOk;
}

// ---- convert ----

int run_convert(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  std::unique_ptr<std::ifstream> file;
  std::istream* src = &in;
  if (path != "-") {
    file = std::make_unique<std::ifstream>(path);
    if (!*file) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    src = file.get();
  }
  Graph6Reader reader(*src);
  std::uint64_t records = 0;
  while (reader.next()) ++records;
  json diags = json::array();
  for (const auto& d : reader.diagnostics()) {
    err << "line " << d.line << ": " << d.reason << '\n';
    diags.push_back({{"line", d.line}, {"reason", d.reason}});
  }
  json j = envelope("convert", {{"check", path}}, start);
  j["lines"] = reader.lines_read();
  j["records"] = records;
  j["malformed"] = reader.diagnostics().size();
  j["diagnostics"] = std::move(diags);
  out << j.dump(2) << '\n';
  return reader.diagnostics().empty() ? kExitOk : kExitUsage;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::OrderCap:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::IterationCap:
      return kExitResourceCap;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal checks for book and theta graphs", "critedge"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GraphCommand rho_cmd;
  auto* rho = app.add_subcommand("rho", "Spectral radius bracket of a graph6 graph");
  rho->add_option("--tol", rho_cmd.tol, "Bracket width")->check(CLI::PositiveNumber);
  rho->add_option("graph", rho_cmd.input, "graph6 string or - for stdin")->required();

  GraphCommand book_cmd;
  auto* bs = app.add_subcommand("booksize", "Largest book contained in a graph");
  bs->add_option("graph", book_cmd.input, "graph6 string or - for stdin")->required();

  GraphCommand contains_cmd;
  auto* con = app.add_subcommand("contains", "Pattern containment with a witness");
  con->add_option("--pattern", contains_cmd.pattern, "book:Q, theta:L, cycle:T or path:K")->required();
  con->add_option("graph", contains_cmd.input, "graph6 string or - for stdin")->required();

  GenCommand gen_cmd;
  auto* gen = app.add_subcommand("gen", "Emit a named graph as graph6");
  gen->add_option("--turan", gen_cmd.turan, "T_{N,K}")->expected(2);
  gen->add_option("--book", gen_cmd.book, "B_Q");
  gen->add_option("--theta", gen_cmd.theta, "theta(L1,L2,L3)")->delimiter(',');
  gen->add_option("--snk", gen_cmd.snk, "S_{N,k} with k = ceil((3 - sqrt 5) N / 4)");
  gen->add_option("--cycle", gen_cmd.cycle, "C_T");
  gen->add_option("--path", gen_cmd.path, "path on K vertices");

  VerifyCommand v;
  auto* ver = app.add_subcommand("verify", "Run a verification scan");
  ver->add_option("--target", v.target, "Target identifier");
  ver->add_option("--n", v.n, "Order (n_max for fact-chain)");
  ver->add_option("--r", v.r, "Pattern or lemma parameter r");
  ver->add_option("--k", v.k, "k_max for fact-chain");
  ver->add_option("--divisor", v.divisor, "Booksize divisor");
  ver->add_option("--x-max", v.x_max, "Largest |X|");
  ver->add_option("--y-max", v.y_max, "Largest |Y|");
  ver->add_option("--pattern", v.pattern, "book:Q, theta:L, cycle:T or path:K");
  ver->add_flag("--assert-rho", v.assert_rho, "Assert rho(S_{n,k}) > n/2");
  ver->add_option("--stream", v.stream, "graph6 corpus (- for stdin) instead of enumeration");
  ver->add_option("--shards", v.shards, "Shard count")->check(CLI::PositiveNumber);
  ver->add_option("--shard", v.shard, "Shard index");
  ver->add_option("--threads", v.threads, "Worker threads");
  ver->add_option("--json", v.json_path, "Also write the report here");
  ver->add_option("--csv", v.csv_path, "Write a one-row CSV summary here");
  ver->add_flag("--no-prefilter", v.no_prefilter, "Disable static prefilters");
  ver->add_option("--tol", v.tol, "Spectral tolerance")->check(CLI::PositiveNumber);
  ver->add_option("--max-iterations", v.max_iterations, "Power iteration budget")->check(CLI::PositiveNumber);
  ver->add_option("--witness-cap", v.witness_cap, "Witness list cap")->check(CLI::PositiveNumber);
  ver->add_option("--merge", v.merge, "Merge saved shard reports")->expected(1, -1);

  SearchCommand s;
  auto* sea = app.add_subcommand("search", "Hill-climbing probe of the spectral extremal problem");
  sea->add_option("--pattern", s.pattern, "Forbidden pattern")->required();
  sea->add_option("--n", s.n, "Order")->required();
  sea->add_option("--restarts", s.restarts, "Random restarts")->required();
  sea->add_option("--seed", s.seed, "Base seed")->required();
  sea->add_option("--budget", s.budget, "Move evaluations per restart");
  sea->add_option("--threads", s.threads, "Worker threads");
  sea->add_option("--json", s.json_path, "Also write the result here");

  std::string check_path;
  auto* conv = app.add_subcommand("convert", "Validate a graph6 corpus");
  conv->add_option("--check", check_path, "File to validate (- for stdin)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rho) return run_rho(rho_cmd, in, out, err);
    if (*bs) return run_booksize(book_cmd, in, out, err);
    if (*con) return run_contains(contains_cmd, in, out, err);
    if (*gen) return run_gen(gen_cmd, *gen, out);
    if (*ver) return run_verify(v, *ver, in, out, err);
    if (*sea) return run_search(s, *sea, out);
    if (*conv) return run_convert(check_path, in, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  return kExitUsage;
}

}  // namespace critedge::cli
