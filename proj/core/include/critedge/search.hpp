#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "critedge/graph.hpp"
#include "critedge/patterns.hpp"
#include "critedge/spectral.hpp"

namespace critedge {

inline constexpr std::int64_t kDefaultSearchBudget = 1'000'000;

/// Called after every accepted move: (restart, graph, rho value).
using SearchTrace = std::function<void(int, const Graph&, double)>;

struct SearchOptions {
  unsigned threads = 1;
  double tol = kDefaultTolerance;
  /// Invoked from worker threads; must be thread-safe when threads > 1.
  SearchTrace trace;
};

/// Best pattern-free graph found by hill climbing. Evidence, never a verdict.
struct SearchResult {
  Graph best{1};
  SpectralEstimate rho;
  PatternSpec pattern;
  int n = 0;
  std::uint64_t seed = 0;
  std::int64_t budget = 0;
  int restarts_used = 0;
  int best_restart = 0;
  std::int64_t iterations = 0;  // move evaluations summed over restarts
  bool matched_turan = false;
  int restarts_matched_turan = 0;
  double gap = 0.0;  // turan_rho_bipartite(n) - rho.value
  bool budget_exhausted = false;
  double elapsed = 0.0;
};

/// Seeded, restart-parallel hill climbing of rho over pattern-free graphs of
/// order n. `budget` caps move evaluations per restart; hitting it sets
/// budget_exhausted rather than throwing. The result does not depend on
/// `opts.threads`.
SearchResult hill_climb(int n, const PatternSpec& p, int restarts, std::uint64_t seed,
                        std::int64_t budget = kDefaultSearchBudget, const SearchOptions& opts = {});

/// !contains(g, p); re-run on every result before it is returned.
bool certify_free(const Graph& g, const PatternSpec& p);

std::string to_json(const SearchResult& r, bool include_elapsed = true);

}  // namespace critedge
