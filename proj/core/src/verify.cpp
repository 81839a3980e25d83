#include "critedge/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <thread>

#include "critedge/enumerate.hpp"
#include "critedge/graph6.hpp"

namespace critedge {

const std::vector<std::string_view>& verify_targets() {
  static const std::vector<std::string_view> targets = {
      kTargetSpectralBook, kTargetSpectralTheta, kTargetBooksizeCorollary, kTargetCycleCorollary,
      kTargetEdgeBook,     kTargetErdosGallai,   kTargetBipartitePath,     kTargetGamma,
      kTargetFactChain,    kTargetTuranNumber,   kTargetSnk};
  return targets;
}

Graph witness_form(const Graph& g) { return g.order() <= kCanonicalMaxOrder ? canonical_graph(g) : g; }

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGammaTolerance = 1e-9;

std::int64_t quarter_square(int n) { return static_cast<std::int64_t>(n) * n / 4; }

SpectralOptions spectral_opts(const ScanOptions& opts, double scale = 1.0) {
  return SpectralOptions{opts.tol * scale, opts.max_iterations};
}

struct DegreeProfile {
  std::int64_t max_degree = 0;
  std::int64_t sum_squares = 0;
  std::int64_t max_two_walks = 0;  // max over v of the degree sum of N(v)
};

DegreeProfile degree_profile(const Graph& g) {
  std::array<std::int64_t, kMaxOrder> deg{};
  DegreeProfile p;
  for (int v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    p.max_degree = std::max(p.max_degree, deg[v]);
    p.sum_squares += deg[v] * deg[v];
  }
  for (int v = 0; v < g.order(); ++v) {
    std::int64_t walks = 0;
    for (Vertex u : g.neighbors(v)) walks += deg[u];
    p.max_two_walks = std::max(p.max_two_walks, walks);
  }
  return p;
}

// rho <= max degree and rho^2 <= max row sum of A^2. Both are integers, so a
// strict inequality against floor(n^2/4) keeps rho at least 1/(2 sqrt T) below
// the threshold.
bool certified_below(const Graph& g, const DegreeProfile& p) {
  const std::int64_t t = quarter_square(g.order());
  return p.max_degree * p.max_degree < t || p.max_two_walks < t;
}

// rho >= 2e/n and rho^2 >= (sum of squared degrees)/n.
bool certified_above(const Graph& g, const DegreeProfile& p) {
  const std::int64_t n = g.order();
  const std::int64_t e = g.size();
  const std::int64_t t = quarter_square(g.order());
  if (4 * e * e >= n * n * t) return true;
  return p.sum_squares >= n * t;
}

enum class Reach { No, Yes, Inconclusive };

// Does rho(g) reach threshold - tol? A straddling bracket is refined once at
// tol/100 before giving up.
Reach bracket_reach(const Graph& g, double threshold, const ScanOptions& opts) {
  for (double scale : {1.0, 0.01}) {
    const SpectralEstimate est = spectral_radius(g, spectral_opts(opts, scale));
    if (est.lower >= threshold - opts.tol) return Reach::Yes;
    if (est.upper < threshold - opts.tol) return Reach::No;
  }
  return Reach::Inconclusive;
}

__extension__ using Int128 = __int128;

constexpr int kExactSquareMaxOrder = 9;
constexpr double kCholeskyMargin = 1e-6;

// Entries of A^2 are common-neighbor counts.
std::array<std::array<std::int64_t, kExactSquareMaxOrder>, kExactSquareMaxOrder> square_of(const Graph& g) {
  std::array<std::array<std::int64_t, kExactSquareMaxOrder>, kExactSquareMaxOrder> a2{};
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i; j < g.order(); ++j) {
      a2[i][j] = a2[j][i] = std::popcount(g.row(i) & g.row(j));
    }
  }
  return a2;
}

// rho^2 >= t iff t*I - A^2 is not positive definite. Bareiss elimination keeps
// the leading principal minors exact; n <= 9 keeps them inside 128 bits.
bool square_reaches_exact(const Graph& g, std::int64_t t) {
  const int n = g.order();
  const auto a2 = square_of(g);
  std::array<std::array<Int128, kExactSquareMaxOrder>, kExactSquareMaxOrder> m{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = (i == j ? t : 0) - a2[i][j];
  }
  Int128 prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return true;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return false;
}

std::array<std::array<Int128, kExactSquareMaxOrder>, kExactSquareMaxOrder> shifted_square(const Graph& g, std::int64_t t) {
  const auto a2 = square_of(g);
  std::array<std::array<Int128, kExactSquareMaxOrder>, kExactSquareMaxOrder> m{};
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) m[i][j] = (i == j ? t : 0) - a2[i][j];
  }
  return m;
}

// Exact determinant of the principal submatrix picked by `rows`, fraction-free.
Int128 principal_minor(const std::array<std::array<Int128, kExactSquareMaxOrder>, kExactSquareMaxOrder>& full,
                       std::uint32_t rows) {
  std::array<int, kExactSquareMaxOrder> idx{};
  int k = 0;
  for (int i = 0; i < kExactSquareMaxOrder; ++i)
    if ((rows >> i) & 1U) idx[k++] = i;
  std::array<std::array<Int128, kExactSquareMaxOrder>, kExactSquareMaxOrder> m{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = full[idx[i]][idx[j]];
  Int128 prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (m[p][p] == 0) {
      int swap = p + 1;
      while (swap < k && m[swap][p] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(m[p], m[swap]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

// Given rho^2 >= t: rho^2 > t iff t*I - A^2 is not positive semidefinite,
// i.e. some principal minor is negative.
bool square_exceeds_exact(const Graph& g, std::int64_t t) {
  const auto m = shifted_square(g, t);
  const std::uint32_t total = std::uint32_t{1} << g.order();
  // Callers already know rho^2 >= t, so a nonsingular t*I - A^2 settles it.
  if (principal_minor(m, total - 1) != 0) return true;
  for (std::uint32_t rows = 1; rows < total; ++rows) {
    if (principal_minor(m, rows) < 0) return true;
  }
  return false;
}

// Cholesky of (t - margin) I - A^2 in doubles. Success means rho^2 < t - margin
// up to rounding many orders of magnitude below the margin.
bool square_clearly_below(const Graph& g, std::int64_t t) {
  const int n = g.order();
  const auto a2 = square_of(g);
  std::array<std::array<double, kExactSquareMaxOrder>, kExactSquareMaxOrder> l{};
  const double shift = static_cast<double>(t) - kCholeskyMargin;
  for (int j = 0; j < n; ++j) {
    double d = shift - static_cast<double>(a2[j][j]);
    for (int k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (d <= kCholeskyMargin * 1e-3) return false;
    l[j][j] = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = -static_cast<double>(a2[i][j]);
      for (int k = 0; k < j; ++k) v -= l[i][k] * l[j][k];
      l[i][j] = v / l[j][j];
    }
  }
  return true;
}

// Same answer as bracket_reach against rho(T_{n,2}), skipping the eigensolve
// when exact or comfortably-margined arithmetic already decides it.
Reach decide_reach(const Graph& g, const ScanOptions& opts) {
  const double threshold = turan_rho_bipartite(g.order());
  if (opts.prefilters && g.order() <= kExactSquareMaxOrder) {
    const std::int64_t t = quarter_square(g.order());
    // rho^2 < t - margin/2 puts rho at least margin/(4 threshold) below; the
    // bracket would then say No as long as that gap exceeds 2 tol.
    if (kCholeskyMargin / (4.0 * threshold) > 2.0 * opts.tol && square_clearly_below(g, t)) return Reach::No;
    if (square_reaches_exact(g, t)) return Reach::Yes;
  }
  return bracket_reach(g, threshold, opts);
}

void put_rho(ValueMap& m, const SpectralEstimate& est) {
  m["rho_value"] = est.value;
  m["rho_lower"] = est.lower;
  m["rho_upper"] = est.upper;
}

ExtremalWitness make_witness(const Graph& w, double score, const ScanOptions& opts) {
  const SpectralEstimate est = spectral_radius(w, spectral_opts(opts));
  ExtremalWitness out;
  out.g6 = write_graph6(w);
  out.score = score;
  out.rho_value = est.value;
  out.rho_lower = est.lower;
  out.rho_upper = est.upper;
  out.edges = w.size();
  out.booksize = booksize(w);
  return out;
}

ViolationRecord make_record(std::string_view target, const Graph& g, const ValueMap& params,
                            const ScanOptions& opts) {
  const Graph w = witness_form(g);
  return ViolationRecord{write_graph6(w), violation_values(target, w, params, opts)};
}

bool is_clique_union(const Graph& g, int clique_order) {
  for (VertexSet comp : g.components()) {
    if (comp.size() != clique_order) return false;
    if (g.edges_within(comp) != clique_order * (clique_order - 1) / 2) return false;
  }
  return true;
}

std::int64_t bipartite_bound(int x, int y, int r) {
  return static_cast<std::int64_t>(r - 1) * x + static_cast<std::int64_t>(r) * y -
         static_cast<std::int64_t>(r) * (r - 1);
}

int first_missing_cycle(const Graph& g, int t_max) {
  for (int t = 3; t <= t_max; ++t) {
    if (!contains(g, PatternSpec::cycle(t))) return t;
  }
  return 0;
}

std::int64_t get_int(const ValueMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter '" + key + "'");
  return std::get<std::int64_t>(it->second);
}

double get_double(const ValueMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter '" + key + "'");
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
  return std::get<double>(it->second);
}

std::string get_string(const ValueMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter '" + key + "'");
  return std::get<std::string>(it->second);
}

// ---- scan engine ----

class GraphCheck {
 public:
  virtual ~GraphCheck() = default;
  /// Static prefilter on (order, edge count); true means the graph cannot matter.
  virtual bool skip_by_edges(int /*n*/, int /*e*/) const { return false; }
  virtual void visit(const Graph& g, VerificationReport& r) const = 0;
};

template <typename Body>
void run_parallel(unsigned threads, Body body) {
  if (threads <= 1) {
    body(0U);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        body(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

VerificationReport merge_all(std::vector<VerificationReport>& parts) {
  VerificationReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    // Partials share every parameter, so fold counts and lists directly.
    VerificationReport& p = parts[i];
    out.scanned += p.scanned;
    out.filtered += p.filtered;
    out.violation_count += p.violation_count - p.violations.size();
    for (auto& v : p.violations) out.add_violation(std::move(v));
    out.inconclusive_count += p.inconclusive_count - p.inconclusive.size();
    for (auto& v : p.inconclusive) out.add_inconclusive(std::move(v));
    for (const auto& w : p.extremal_witnesses) out.offer_witness(w);
    for (auto& n : p.notes) out.add_note(std::move(n));
    for (auto& [k, v] : p.summary) out.summary.emplace(k, v);
  }
  return out;
}

void scan_enumerated(int n, const GraphCheck& check, VerificationReport& report, const ScanOptions& opts) {
  EnumerationSpec spec{n, EnumerationMode::Labeled, opts.shard_count, opts.shard_index};
  validate(spec);
  const unsigned threads = std::max(1U, opts.threads);
  const std::uint64_t stride = opts.shard_count * threads;
  const std::uint64_t end = std::uint64_t{1} << pair_count(n);
  std::vector<VerificationReport> parts(threads, report);
  run_parallel(threads, [&](unsigned t) {
    VerificationReport& part = parts[t];
    for (std::uint64_t m = opts.shard_index + opts.shard_count * t; m < end; m += stride) {
      ++part.scanned;
      if (opts.prefilters && check.skip_by_edges(n, std::popcount(m))) {
        ++part.filtered;
        continue;
      }
      check.visit(Graph::from_upper_mask(n, m), part);
    }
  });
  report = merge_all(parts);
}

void scan_stream(const GraphCheck& check, VerificationReport& report, const ScanOptions& opts) {
  Graph6Reader reader(*opts.stream);
  const unsigned threads = std::max(1U, opts.threads);
  std::vector<VerificationReport> parts(threads, report);
  std::vector<Graph> batch;
  std::uint64_t index = 0;
  auto flush = [&] {
    run_parallel(threads, [&](unsigned t) {
      VerificationReport& part = parts[t];
      for (std::size_t i = t; i < batch.size(); i += threads) {
        const Graph& g = batch[i];
        ++part.scanned;
        if (opts.prefilters && check.skip_by_edges(g.order(), g.size())) {
          ++part.filtered;
          continue;
        }
        check.visit(g, part);
      }
    });
    batch.clear();
  };
  while (auto g = reader.next()) {
    // Streams are sharded by record index.
    if (index++ % opts.shard_count != opts.shard_index) continue;
    batch.push_back(std::move(*g));
    if (batch.size() >= 4096) flush();
  }
  flush();
  report = merge_all(parts);
  if (opts.diagnostics) {
    opts.diagnostics->insert(opts.diagnostics->end(), reader.diagnostics().begin(), reader.diagnostics().end());
  }
  if (!reader.diagnostics().empty()) {
    report.summary["malformed_records"] = static_cast<std::int64_t>(reader.diagnostics().size());
    report.add_note("malformed graph6 records were skipped (see diagnostics)");
  }
}

VerificationReport new_report(std::string_view target, ValueMap params, const ScanOptions& opts,
                              OptimumSense sense, double tie_window) {
  VerificationReport r;
  r.target = std::string(target);
  params["tol"] = opts.tol;
  params["max_iterations"] = opts.max_iterations;
  params["source"] = opts.stream ? "stream:" + opts.stream_name : std::string("enumerate");
  set_shard_params(params, opts.shard_count, opts.shard_index);
  r.params = std::move(params);
  r.sense = sense;
  r.tie_window = tie_window;
  r.witness_cap = opts.witness_cap;
  return r;
}

void check_scan_options(const ScanOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (opts.shard_count < 1 || opts.shard_index >= opts.shard_count) {
    throw Error(ErrorKind::InvalidArgument, "shard index must lie in [0, shard_count)");
  }
  if (opts.witness_cap < 1) throw Error(ErrorKind::InvalidArgument, "witness cap must be positive");
}

VerificationReport run_scan(int n, const GraphCheck& check, VerificationReport report, const ScanOptions& opts) {
  const auto start = Clock::now();
  if (opts.stream) {
    scan_stream(check, report, opts);
  } else {
    scan_enumerated(n, check, report, opts);
  }
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

// ---- checks ----

// Theorem ranges: B_{r+1} for n >= 13r/2; theta(1,2,r+1) for n >= 10r (r odd)
// or n >= 7r (r even). theta(1,2,2) is B_2.
bool in_spectral_theorem_range(const PatternSpec& spec, int n) {
  const PatternSpec p = spec.normalized();
  if (p.kind == PatternSpec::Kind::Book) {
    const int r = p.param - 1;
    return r >= 1 && 2 * n >= 13 * r;
  }
  if (p.kind == PatternSpec::Kind::Theta123) {
    const int r = p.param - 1;
    return r % 2 == 1 ? n >= 10 * r : n >= 7 * r;
  }
  return false;
}


class SpectralTheoremCheck final : public GraphCheck {
 public:
  SpectralTheoremCheck(std::string_view target, PatternSpec p, ValueMap params, const ScanOptions& opts)
      : target_(target), pattern_(p), params_(std::move(params)), opts_(opts) {}

  bool skip_by_edges(int n, int e) const override { return 2LL * e + 1 < quarter_square(n); }

  void visit(const Graph& g, VerificationReport& r) const override {
    if (opts_.stream && !in_spectral_theorem_range(pattern_, g.order())) {
      ++r.filtered;
      r.add_note("stream graphs outside the theorem range were skipped");
      return;
    }
    if (opts_.prefilters) {
      if (certified_below(g, degree_profile(g)) || contains(g, pattern_)) {
        ++r.filtered;
        return;
      }
    }
    const Reach reach = decide_reach(g, opts_);
    if (!opts_.prefilters && contains(g, pattern_)) return;
    if (reach == Reach::Inconclusive) {
      r.add_inconclusive(make_record(target_, g, params_, opts_));
      return;
    }
    if (reach == Reach::No) return;
    if (!is_turan(g, 2)) r.add_violation(make_record(target_, g, params_, opts_));
    if (r.could_be_extremal(spectral_radius(g, spectral_opts(opts_)).value)) {
      const Graph w = witness_form(g);
      r.offer_witness(make_witness(w, spectral_radius(w, spectral_opts(opts_)).value, opts_));
    }
  }

 private:
  std::string_view target_;
  PatternSpec pattern_;
  ValueMap params_;
  ScanOptions opts_;
};

// Shared shape of the two corollaries over graphs with rho >= rho(T_{n,2}).
class SpectralQualifyingCheck : public GraphCheck {
 public:
  SpectralQualifyingCheck(std::string_view target, ValueMap params, const ScanOptions& opts)
      : target_(target), params_(std::move(params)), opts_(opts) {}

  bool skip_by_edges(int n, int e) const override { return 2LL * e + 1 < quarter_square(n); }

 protected:
  // Decides membership in the qualifying set (rho at threshold, not T_{n,2}).
  Reach qualifies(const Graph& g, const DegreeProfile& profile) const {
    Reach reach;
    if (opts_.prefilters && certified_above(g, profile)) {
      reach = Reach::Yes;
    } else {
      reach = decide_reach(g, opts_);
    }
    if (reach == Reach::Yes && is_turan(g, 2)) return Reach::No;
    if (reach == Reach::Yes && strict_) return exceeds(g);
    return reach;
  }

  // Fills `profile` when prefilters are on.
  bool filtered_by_bounds(const Graph& g, VerificationReport& r, DegreeProfile& profile) const {
    if (!opts_.prefilters) return false;
    profile = degree_profile(g);
    if (certified_below(g, profile)) {
      ++r.filtered;
      return true;
    }
    return false;
  }

  // Strict rho > rho(T_{n,2}) for graphs already known to reach it.
  Reach exceeds(const Graph& g) const {
    if (g.order() <= kExactSquareMaxOrder) {
      return square_exceeds_exact(g, quarter_square(g.order())) ? Reach::Yes : Reach::No;
    }
    const double threshold = turan_rho_bipartite(g.order());
    for (double scale : {1.0, 0.01}) {
      const SpectralEstimate est = spectral_radius(g, spectral_opts(opts_, scale));
      if (est.lower > threshold + opts_.tol) return Reach::Yes;
      if (est.upper <= threshold + opts_.tol) return Reach::No;
    }
    return Reach::Inconclusive;
  }

  std::string_view target_;
  ValueMap params_;
  ScanOptions opts_;
  bool strict_ = false;
};

class BooksizeCorollaryCheck final : public SpectralQualifyingCheck {
 public:
  BooksizeCorollaryCheck(ValueMap params, const ScanOptions& opts, double divisor)
      : SpectralQualifyingCheck(kTargetBooksizeCorollary, std::move(params), opts), divisor_(divisor) {
    strict_ = divisor < 6.5;
  }

  void visit(const Graph& g, VerificationReport& r) const override {
    DegreeProfile profile;
    if (filtered_by_bounds(g, r, profile)) return;
    const int bs = booksize(g);
    const bool violating = bs * divisor_ <= g.order();
    if (!violating && !r.could_be_extremal(bs)) return;
    const Reach reach = qualifies(g, profile);
    if (reach == Reach::Inconclusive) {
      if (violating) r.add_inconclusive(make_record(target_, g, params_, opts_));
      return;
    }
    if (reach == Reach::No) return;
    if (violating) r.add_violation(make_record(target_, g, params_, opts_));
    r.offer_witness(make_witness(witness_form(g), bs, opts_));
  }

 private:
  double divisor_;
};

class CycleCorollaryCheck final : public SpectralQualifyingCheck {
 public:
  using SpectralQualifyingCheck::SpectralQualifyingCheck;

  void visit(const Graph& g, VerificationReport& r) const override {
    const int t_max = g.order() / 7;
    if (t_max < 3) {
      ++r.filtered;
      return;
    }
    DegreeProfile profile;
    if (filtered_by_bounds(g, r, profile)) return;
    const int missing = first_missing_cycle(g, t_max);
    if (missing == 0) return;
    const Reach reach = qualifies(g, profile);
    if (reach == Reach::Inconclusive) r.add_inconclusive(make_record(target_, g, params_, opts_));
    if (reach == Reach::Yes) r.add_violation(make_record(target_, g, params_, opts_));
  }
};

class EdgeBookCheck final : public GraphCheck {
 public:
  EdgeBookCheck(ValueMap params, const ScanOptions& opts) : params_(std::move(params)), opts_(opts) {}

  bool skip_by_edges(int n, int e) const override { return e <= quarter_square(n); }

  void visit(const Graph& g, VerificationReport& r) const override {
    if (g.size() <= quarter_square(g.order())) return;
    const int bs = booksize(g);
    const bool violating = 6LL * bs <= g.order();
    if (violating) r.add_violation(make_record(kTargetEdgeBook, g, params_, opts_));
    if (r.could_be_extremal(bs)) r.offer_witness(make_witness(witness_form(g), bs, opts_));
  }

 private:
  ValueMap params_;
  ScanOptions opts_;
};

class ErdosGallaiCheck final : public GraphCheck {
 public:
  ErdosGallaiCheck(int r, ValueMap params, const ScanOptions& opts)
      : r_(r), params_(std::move(params)), opts_(opts) {}

  bool skip_by_edges(int n, int e) const override { return 2LL * e < static_cast<std::int64_t>(r_) * n; }

  void visit(const Graph& g, VerificationReport& rep) const override {
    const std::int64_t twice = 2LL * g.size();
    const std::int64_t bound = static_cast<std::int64_t>(r_) * g.order();
    if (twice < bound) return;
    if (contains(g, PatternSpec::path_on(r_ + 2))) return;
    if (twice > bound || !is_clique_union(g, r_ + 1)) {
      rep.add_violation(make_record(kTargetErdosGallai, g, params_, opts_));
      return;
    }
    rep.offer_witness(make_witness(witness_form(g), static_cast<double>(g.size()), opts_));
  }

 private:
  int r_;
  ValueMap params_;
  ScanOptions opts_;
};

class GammaCheck final : public GraphCheck {
 public:
  GammaCheck(ValueMap params, const ScanOptions& opts) : params_(std::move(params)), opts_(opts) {}

  void visit(const Graph& g, VerificationReport& r) const override {
    if (g.size() == 0 || !g.connected()) {
      ++r.filtered;
      return;
    }
    const GammaDecomposition d = gamma_star(g, spectral_opts(opts_));
    const double diff = static_cast<double>(d.gamma) - d.rho.lower * d.rho.lower;
    if (diff < -kGammaTolerance) r.add_violation(make_record(kTargetGamma, g, params_, opts_));
    if (r.could_be_extremal(diff)) {
      const Graph w = witness_form(g);
      const GammaDecomposition dw = gamma_star(w, spectral_opts(opts_));
      r.offer_witness(make_witness(w, static_cast<double>(dw.gamma) - dw.rho.lower * dw.rho.lower, opts_));
    }
  }

 private:
  ValueMap params_;
  ScanOptions opts_;
};

class TuranNumberCheck final : public GraphCheck {
 public:
  TuranNumberCheck(PatternSpec p, bool asserted, ValueMap params, const ScanOptions& opts)
      : pattern_(p), asserted_(asserted), params_(std::move(params)), opts_(opts) {}

  void visit(const Graph& g, VerificationReport& r) const override {
    const bool excess = asserted_ && g.size() > quarter_square(g.order());
    if (!excess && !r.could_be_extremal(g.size())) return;
    if (contains(g, pattern_)) return;
    if (excess) r.add_violation(make_record(kTargetTuranNumber, g, params_, opts_));
    r.offer_witness(make_witness(witness_form(g), static_cast<double>(g.size()), opts_));
  }

 private:
  PatternSpec pattern_;
  bool asserted_;
  ValueMap params_;
  ScanOptions opts_;
};

void require_order_or_stream(int n, const ScanOptions& opts) {
  if (opts.stream) return;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  if (n > kLabeledEnumerationMaxOrder) {
    throw Error(ErrorKind::OrderCap, "exhaustive scans support n <= " +
                                         std::to_string(kLabeledEnumerationMaxOrder) +
                                         "; supply a graph6 stream for larger orders");
  }
  if (n > 7 && opts.shard_count < 2 && opts.threads < 2) {
    throw Error(ErrorKind::InvalidArgument, "scans above n = 7 require sharding or several threads");
  }
}

}  // namespace

// ---- diagnostics ----

ValueMap violation_values(std::string_view target, const Graph& g, const ValueMap& params,
                          const ScanOptions& opts) {
  ValueMap m;
  const int n = g.order();
  m["e"] = static_cast<std::int64_t>(g.size());
  if (target == kTargetSpectralBook || target == kTargetSpectralTheta) {
    put_rho(m, spectral_radius(g, spectral_opts(opts, 0.01)));
    m["threshold"] = turan_rho_bipartite(n);
    m["booksize"] = static_cast<std::int64_t>(booksize(g));
  } else if (target == kTargetBooksizeCorollary) {
    put_rho(m, spectral_radius(g, spectral_opts(opts, 0.01)));
    m["threshold"] = turan_rho_bipartite(n);
    m["booksize"] = static_cast<std::int64_t>(booksize(g));
    m["booksize_bound"] = n / get_double(params, "divisor");
  } else if (target == kTargetCycleCorollary) {
    put_rho(m, spectral_radius(g, spectral_opts(opts, 0.01)));
    m["threshold"] = turan_rho_bipartite(n);
    m["missing_cycle"] = static_cast<std::int64_t>(first_missing_cycle(g, n / 7));
  } else if (target == kTargetEdgeBook) {
    m["edge_threshold"] = quarter_square(n);
    m["booksize"] = static_cast<std::int64_t>(booksize(g));
  } else if (target == kTargetErdosGallai) {
    const std::int64_t r = get_int(params, "r");
    m["longest_path"] = static_cast<std::int64_t>(longest_path_edges(g));
    m["twice_bound"] = r * n;
    m["clique_union"] = is_clique_union(g, static_cast<int>(r) + 1);
  } else if (target == kTargetBipartitePath) {
    const std::int64_t r = get_int(params, "r");
    const int x = static_cast<int>(get_int(params, "x"));
    m["x"] = static_cast<std::int64_t>(x);
    m["y"] = static_cast<std::int64_t>(n - x);
    m["bound"] = bipartite_bound(x, n - x, static_cast<int>(r));
    m["longest_xx_path"] = static_cast<std::int64_t>(longest_xx_path_edges(g, VertexSet::range(x)));
  } else if (target == kTargetGamma) {
    const GammaDecomposition d = gamma_star(g, spectral_opts(opts));
    m["gamma"] = d.gamma;
    m["u_star"] = static_cast<std::int64_t>(d.u_star);
    m["a_size"] = static_cast<std::int64_t>(d.a.size());
    m["e_a"] = static_cast<std::int64_t>(d.e_a);
    m["e_ab"] = static_cast<std::int64_t>(d.e_ab);
    put_rho(m, d.rho);
    m["rho_lower_squared"] = d.rho.lower * d.rho.lower;
  } else if (target == kTargetTuranNumber) {
    m["edge_threshold"] = quarter_square(n);
    m["pattern"] = get_string(params, "pattern");
  } else {
    throw Error(ErrorKind::InvalidArgument, "no per-graph diagnostics for target '" + std::string(target) + "'");
  }
  return m;
}

// ---- entry points ----

VerificationReport verify_spectral_theorem(int n, const PatternSpec& p, const ScanOptions& opts) {
  check_scan_options(opts);
  require_order_or_stream(n, opts);
  std::string_view target;
  if (p.kind == PatternSpec::Kind::Book) {
    target = kTargetSpectralBook;
  } else if (p.kind == PatternSpec::Kind::Theta123) {
    target = kTargetSpectralTheta;
  } else {
    throw Error(ErrorKind::InvalidArgument, "spectral theorem scans take book or theta patterns");
  }
  ValueMap params{{"n", static_cast<std::int64_t>(n)}, {"pattern", p.to_string()}};
  VerificationReport report =
      new_report(target, params, opts, OptimumSense::Max, std::max(2.0 * opts.tol, 1e-9));
  if (!opts.stream && !in_spectral_theorem_range(p, n)) {
    report.report_only = true;
    report.add_note("below theorem range: report-only");
  }
  SpectralTheoremCheck check(target, p, report.params, opts);
  return run_scan(n, check, std::move(report), opts);
}

VerificationReport verify_booksize_corollary(int n, double divisor, const ScanOptions& opts) {
  check_scan_options(opts);
  require_order_or_stream(n, opts);
  if (!(divisor > 0.0)) throw Error(ErrorKind::InvalidArgument, "divisor must be positive");
  ValueMap params{{"n", static_cast<std::int64_t>(n)}, {"divisor", divisor}};
  VerificationReport report = new_report(kTargetBooksizeCorollary, params, opts, OptimumSense::Min, 0.0);
  if (divisor < 6.5) {
    report.report_only = true;
    report.add_note("divisor below 6.5 probes an open problem: report-only");
    report.add_note("probe qualifies graphs by strict rho > rho(T_{n,2})");
  }
  BooksizeCorollaryCheck check(report.params, opts, divisor);
  return run_scan(n, check, std::move(report), opts);
}

VerificationReport verify_cycle_corollary(int n, const ScanOptions& opts) {
  check_scan_options(opts);
  require_order_or_stream(n, opts);
  ValueMap params{{"n", static_cast<std::int64_t>(n)}};
  VerificationReport report = new_report(kTargetCycleCorollary, params, opts, OptimumSense::None, 0.0);
  if (!opts.stream && n / 7 < 3) {
    report.add_note("vacuous: floor(n/7) < 3, no cycle length to check");
    return report;
  }
  CycleCorollaryCheck check(kTargetCycleCorollary, report.params, opts);
  return run_scan(n, check, std::move(report), opts);
}

VerificationReport verify_edge_book(int n, const ScanOptions& opts) {
  check_scan_options(opts);
  require_order_or_stream(n, opts);
  ValueMap params{{"n", static_cast<std::int64_t>(n)}};
  VerificationReport report = new_report(kTargetEdgeBook, params, opts, OptimumSense::Min, 0.0);
  EdgeBookCheck check(report.params, opts);
  return run_scan(n, check, std::move(report), opts);
}

VerificationReport verify_erdos_gallai(int n, int r, const ScanOptions& opts) {
  check_scan_options(opts);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "erdos-gallai requires r >= 1");
  if (!opts.stream && n > 7) throw Error(ErrorKind::OrderCap, "erdos-gallai scans support n <= 7");
  require_order_or_stream(n, opts);
  ValueMap params{{"n", static_cast<std::int64_t>(n)}, {"r", static_cast<std::int64_t>(r)}};
  VerificationReport report = new_report(kTargetErdosGallai, params, opts, OptimumSense::None, 0.0);
  ErdosGallaiCheck check(r, report.params, opts);
  return run_scan(n, check, std::move(report), opts);
}

VerificationReport verify_bipartite_path_lemma(int x_max, int y_max, int r, const ScanOptions& opts) {
  check_scan_options(opts);
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "bipartite-path requires r >= 2 (|Y| >= r-1 >= 1)");
  if (x_max < 1 || y_max < 1) throw Error(ErrorKind::InvalidArgument, "part sizes must be positive");
  if (x_max + y_max > 9) throw Error(ErrorKind::OrderCap, "bipartite-path requires x_max + y_max <= 9");
  const auto start = Clock::now();
  ValueMap params{{"x_max", static_cast<std::int64_t>(x_max)},
                  {"y_max", static_cast<std::int64_t>(y_max)},
                  {"r", static_cast<std::int64_t>(r)}};
  VerificationReport report = new_report(kTargetBipartitePath, params, opts, OptimumSense::None, 0.0);
  report.params.erase("source");
  std::int64_t equality_classes_expected = 0;
  std::int64_t equality_classes_seen = 0;

  for (int x = r; x <= x_max; ++x) {
    for (int y = r - 1; y <= y_max; ++y) {
      const int n = x + y;
      const std::int64_t bound = bipartite_bound(x, y, r);
      const bool named_equality = (x == r || y == r - 1);
      if (named_equality) ++equality_classes_expected;
      bool complete_seen = false;
      ValueMap local = report.params;
      local["x"] = static_cast<std::int64_t>(x);
      const std::uint64_t cells = static_cast<std::uint64_t>(x) * y;
      const std::uint64_t end = std::uint64_t{1} << cells;
      for (std::uint64_t m = opts.shard_index; m < end; m += opts.shard_count) {
        ++report.scanned;
        if (opts.prefilters && std::popcount(m) < bound) {
          ++report.filtered;
          continue;
        }
        std::vector<std::uint64_t> rows(n, 0);
        for (std::uint64_t c = 0; c < cells; ++c) {
          if (!((m >> c) & 1U)) continue;
          const int u = static_cast<int>(c / y);
          const int v = x + static_cast<int>(c % y);
          rows[u] |= std::uint64_t{1} << v;
          rows[v] |= std::uint64_t{1} << u;
        }
        const Graph g = Graph::from_rows(n, rows);
        if (g.size() < bound) continue;
        if (longest_xx_path_edges(g, VertexSet::range(x)) >= 2 * r) continue;
        const bool complete = g.size() == static_cast<int>(cells);
        ViolationRecord rec{write_graph6(g), violation_values(kTargetBipartitePath, g, local, opts)};
        if (g.size() > bound || !complete || !named_equality) {
          rec.values["kind"] = std::string(g.size() > bound ? "exceeds bound" : "unexpected equality graph");
          report.add_violation(std::move(rec));
          continue;
        }
        complete_seen = true;
        ExtremalWitness w = make_witness(g, static_cast<double>(g.size()), opts);
        report.offer_witness(w);
      }
      // The complete graph is mask end-1; only the shard owning it can see it.
      if (named_equality && (end - 1) % opts.shard_count == opts.shard_index) {
        if (complete_seen) {
          ++equality_classes_seen;
        } else {
          const Graph kxy = complete_bipartite(x, y);
          ViolationRecord rec{write_graph6(kxy), violation_values(kTargetBipartitePath, kxy, local, opts)};
          rec.values["kind"] = std::string("named equality case not attained");
          report.add_violation(std::move(rec));
        }
      } else if (named_equality) {
        ++equality_classes_seen;  // accounted for by the owning shard
      }
    }
  }
  report.summary["equality_cases_expected"] = equality_classes_expected;
  report.summary["equality_cases_seen"] = equality_classes_seen;
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerificationReport verify_gamma_bound(int n, const ScanOptions& opts) {
  check_scan_options(opts);
  if (!opts.stream && n > 7) throw Error(ErrorKind::OrderCap, "gamma scans support n <= 7");
  require_order_or_stream(n, opts);
  ValueMap params{{"n", static_cast<std::int64_t>(n)}};
  VerificationReport report =
      new_report(kTargetGamma, params, opts, OptimumSense::Min, 2.0 * kGammaTolerance);
  GammaCheck check(report.params, opts);
  return run_scan(n, check, std::move(report), opts);
}

VerificationReport verify_fact_chain(int k_max, int n_max, const ScanOptions& opts) {
  check_scan_options(opts);
  if (k_max < 1 || n_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max and n_max must be positive");
  const auto start = Clock::now();
  ValueMap params{{"k_max", static_cast<std::int64_t>(k_max)}, {"n_max", static_cast<std::int64_t>(n_max)}};
  VerificationReport report = new_report(kTargetFactChain, params, opts, OptimumSense::Min, 0.0);
  report.params.erase("source");
  report.params.erase("max_iterations");
  double min_margin = 0.0;
  std::int64_t arg_n = 0;
  std::int64_t arg_k = 0;
  bool first = true;
  for (int k = 1; k <= k_max; ++k) {
    for (int n = k; n <= n_max; ++n) {
      if (static_cast<std::uint64_t>(n) % opts.shard_count != opts.shard_index) continue;
      ++report.scanned;
      const double lhs = 0.5 * n * turan_rho_closed_form(n, k);
      const double rhs = static_cast<double>(turan_edge_count(n, k) + 1);
      const double margin = rhs - lhs;
      if (first || margin < min_margin) {
        min_margin = margin;
        arg_n = n;
        arg_k = k;
        first = false;
      }
      if (!(lhs < rhs)) {
        ViolationRecord rec;
        rec.g6 = n <= kMaxOrder ? write_graph6(turan(n, k)) : std::string();
        rec.values = {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)},
                      {"half_n_rho", lhs}, {"edges_plus_one", rhs}};
        report.add_violation(std::move(rec));
      }
    }
  }
  if (!first) {
    report.optimum = min_margin;
    report.optimum_at = {{"k", arg_k}, {"n", arg_n}};
  }
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerificationReport verify_turan_number(int n, const PatternSpec& p, const ScanOptions& opts) {
  check_scan_options(opts);
  require_order_or_stream(n, opts);
  ValueMap params{{"n", static_cast<std::int64_t>(n)}, {"pattern", p.to_string()}};
  VerificationReport report = new_report(kTargetTuranNumber, params, opts, OptimumSense::Max, 0.0);
  const PatternSpec norm = p.normalized();
  bool asserted = false;
  if (norm == PatternSpec::book(1)) {
    asserted = true;  // Mantel
  } else if (!opts.stream) {
    asserted = in_spectral_theorem_range(p, n);
  }
  if (!asserted) {
    report.report_only = true;
    report.add_note("outside the range where ex(n) = floor(n^2/4) is claimed: report-only");
  }
  TuranNumberCheck check(p, asserted, report.params, opts);
  return run_scan(n, check, std::move(report), opts);
}

int snk_clique_size(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "S_{n,k} requires n >= 2");
  return static_cast<int>(std::ceil((3.0 - std::sqrt(5.0)) * n / 4.0));
}

VerificationReport check_snk(int n, bool assert_rho, const ScanOptions& opts) {
  check_scan_options(opts);
  const auto start = Clock::now();
  const int k = snk_clique_size(n);
  ValueMap params{{"n", static_cast<std::int64_t>(n)}, {"assert_rho", assert_rho}};
  VerificationReport report = new_report(kTargetSnk, params, opts, OptimumSense::None, 0.0);
  report.params.erase("source");
  report.scanned = 1;
  auto& s = report.summary;
  s["k"] = static_cast<std::int64_t>(k);
  s["half_n"] = n / 2.0;
  s["cycle_length_bound"] = static_cast<std::int64_t>(2 * k);
  const double rho_quotient = clique_join_rho(n, k);
  s["rho_quotient"] = rho_quotient;
  double rho_lower = rho_quotient;
  double rho_upper = rho_quotient;

  if (n <= kMaxOrder) {
    const Graph g = clique_join_independent(n, k);
    const SpectralEstimate est = spectral_radius(g, spectral_opts(opts));
    s["rho_source"] = std::string("power iteration");
    put_rho(s, est);
    rho_lower = est.lower;
    rho_upper = est.upper;
    s["independent_rest"] = g.edges_within(g.vertices() - VertexSet::range(k)) == 0;
    if (n <= 12) {
      const bool long_cycle = 2 * k + 1 <= n && contains(g, PatternSpec::cycle(2 * k + 1));
      s["longest_cycle_checked"] = true;
      s["has_cycle_longer_than_2k"] = long_cycle;
      if (long_cycle) {
        report.add_violation({write_graph6(g), {{"kind", std::string("cycle longer than 2k")}}});
      }
    }
    ExtremalWitness w;
    w.g6 = write_graph6(g);
    w.score = est.value;
    w.rho_value = est.value;
    w.rho_lower = est.lower;
    w.rho_upper = est.upper;
    w.edges = g.size();
    w.booksize = booksize(g);
    report.offer_witness(w);
  } else {
    // Above the order cap the independence check runs on the join's
    // definition directly: vertex i is adjacent to j iff one of them is in the clique.
    s["rho_source"] = std::string("quotient formula");
    bool independent = true;
    auto adjacent = [k](int i, int j) { return i != j && (i < k || j < k); };
    for (int i = k; i < n && independent; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (adjacent(i, j)) {
          independent = false;
          break;
        }
      }
    }
    s["independent_rest"] = independent;
  }
  if (!std::get<bool>(s["independent_rest"])) {
    report.add_violation({"", {{"kind", std::string("non-clique part is not independent")}}});
  }
  const bool exceeds = rho_lower > n / 2.0;
  const bool below = rho_upper <= n / 2.0;
  s["rho_exceeds_half_n"] = exceeds;
  if (!exceeds && !below) report.add_note("rho bracket straddles n/2");
  // Small orders are known to fail the inequality, so it is only asserted from n = 62 on.
  const bool asserted = assert_rho && n >= kSnkAssertMinOrder;
  if (asserted) {
    if (below) {
      report.add_violation({n <= kMaxOrder ? write_graph6(clique_join_independent(n, k)) : std::string(),
                            {{"kind", std::string("rho(S_{n,k}) <= n/2")}, {"rho_quotient", rho_quotient}}});
    } else if (!exceeds) {
      report.add_inconclusive({std::string(), {{"rho_quotient", rho_quotient}}});
    }
  } else {
    report.report_only = true;
    report.add_note(assert_rho ? "rho(S_{n,k}) > n/2 is not asserted below n = 62"
                               : "rho(S_{n,k}) > n/2 is reported, not asserted");
  }
  report.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace critedge
