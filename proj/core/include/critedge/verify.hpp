#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "critedge/graph.hpp"
#include "critedge/graph6.hpp"
#include "critedge/patterns.hpp"
#include "critedge/report.hpp"
#include "critedge/spectral.hpp"

namespace critedge {

/// Shared knobs for every scan.
struct ScanOptions {
  double tol = kDefaultTolerance;
  std::int64_t max_iterations = kDefaultIterationBudget;
  std::uint64_t shard_count = 1;
  std::uint64_t shard_index = 0;
  unsigned threads = 1;
  bool prefilters = true;
  std::size_t witness_cap = kDefaultWitnessCap;
  /// When set, graphs come from this graph6 stream instead of enumeration.
  std::istream* stream = nullptr;
  std::string stream_name;
  /// Receives malformed-record diagnostics from `stream` when set.
  std::vector<Diagnostic>* diagnostics = nullptr;
};

/// Stable target identifiers, one per verification routine.
inline constexpr std::string_view kTargetSpectralBook = "spectral-book";
inline constexpr std::string_view kTargetSpectralTheta = "spectral-theta";
inline constexpr std::string_view kTargetBooksizeCorollary = "booksize-cor";
inline constexpr std::string_view kTargetCycleCorollary = "cycle-cor";
inline constexpr std::string_view kTargetEdgeBook = "edge-book";
inline constexpr std::string_view kTargetErdosGallai = "erdos-gallai";
inline constexpr std::string_view kTargetBipartitePath = "bipartite-path";
inline constexpr std::string_view kTargetGamma = "gamma";
inline constexpr std::string_view kTargetFactChain = "fact-chain";
inline constexpr std::string_view kTargetTuranNumber = "turan-number";
inline constexpr std::string_view kTargetSnk = "snk";

const std::vector<std::string_view>& verify_targets();

/// Spectral extremal uniqueness: a pattern-free graph G of order n with
/// rho(G) >= rho(T_{n,2}) must be T_{n,2}. Extremal witnesses are the
/// pattern-free graphs of maximum rho among those reaching the threshold.
/// Pattern must be Book or Theta123.
VerificationReport verify_spectral_theorem(int n, const PatternSpec& p, const ScanOptions& opts = {});

/// Graphs with rho >= rho(T_{n,2}) other than T_{n,2} must have booksize > n/divisor.
/// Divisors below 6.5 run report-only.
VerificationReport verify_booksize_corollary(int n, double divisor, const ScanOptions& opts = {});

/// Graphs with rho >= rho(T_{n,2}) other than T_{n,2} contain C_t for 3 <= t <= n/7.
VerificationReport verify_cycle_corollary(int n, const ScanOptions& opts = {});

/// Graphs with e > floor(n^2/4) have booksize > n/6.
VerificationReport verify_edge_book(int n, const ScanOptions& opts = {});

/// P_{r+2}-free graphs have e <= rn/2, with equality only for disjoint K_{r+1}'s.
VerificationReport verify_erdos_gallai(int n, int r, const ScanOptions& opts = {});

/// Bipartite graphs <X,Y> with |X| >= r, |Y| >= r-1 >= 1 and no X-X path on
/// 2r+1 vertices have e <= (r-1)|X| + r|Y| - r(r-1), with equality exactly
/// for K_{|X|,|Y|} where |X| = r or |Y| = r-1.
VerificationReport verify_bipartite_path_lemma(int x_max, int y_max, int r, const ScanOptions& opts = {});

/// gamma(u*) >= rho^2 on connected graphs.
VerificationReport verify_gamma_bound(int n, const ScanOptions& opts = {});

/// (n/2) rho(T_{n,k}) < e(T_{n,k}) + 1 for 1 <= k <= k_max, k <= n <= n_max.
VerificationReport verify_fact_chain(int k_max, int n_max, const ScanOptions& opts = {});

/// Maximum edge count over pattern-free graphs of order n with its witnesses.
VerificationReport verify_turan_number(int n, const PatternSpec& p, const ScanOptions& opts = {});

/// Builds S_{n,k} with k = ceil((3 - sqrt 5) n / 4) and reports rho against
/// n/2 plus the independence of the non-clique part.
VerificationReport check_snk(int n, bool assert_rho, const ScanOptions& opts = {});

/// k = ceil((3 - sqrt 5) n / 4).
int snk_clique_size(int n);

inline constexpr int kSnkAssertMinOrder = 62;

/// Diagnostic values recorded for a violation of `target`, recomputed from
/// the graph alone so that re-parsed witnesses reproduce them exactly.
ValueMap violation_values(std::string_view target, const Graph& g, const ValueMap& params,
                          const ScanOptions& opts = {});

/// Relabeling used for every reported witness: canonical when n <= 10.
Graph witness_form(const Graph& g);

}  // namespace critedge
