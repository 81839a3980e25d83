#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critedge/graph.hpp"

namespace critedge {

inline constexpr int kLabeledEnumerationMaxOrder = 8;

enum class EnumerationMode { Labeled, CanonicalDeduped };

struct EnumerationSpec {
  int n = 1;
  EnumerationMode mode = EnumerationMode::Labeled;
  std::uint64_t shard_count = 1;
  std::uint64_t shard_index = 0;
};

/// Number of vertex pairs, i.e. bits in an upper-triangle mask.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Lazily yields graphs for one shard.
///
/// Labeled mode: masks m with m mod shard_count == shard_index, ascending.
/// Canonical mode: one canonical representative per isomorphism class, in
/// order of first labeled occurrence; classes are assigned to shards by a
/// hash of the canonical code, so shards stay disjoint.
class LabeledEnumerator {
 public:
  explicit LabeledEnumerator(const EnumerationSpec& spec);

  std::optional<Graph> next();

  /// Visits every upper-triangle mask of the shard (labeled mode only),
  /// without materializing a Graph. Stops early if `visit` returns false.
  static void for_each_mask(const EnumerationSpec& spec, const std::function<bool(std::uint64_t)>& visit);

 private:
  EnumerationSpec spec_;
  std::uint64_t next_mask_;
  std::uint64_t end_mask_;
  std::vector<std::string> seen_;  // sorted canonical codes (deduped mode)
};

void validate(const EnumerationSpec& spec);

/// Deterministic 64-bit FNV-1a, used for shard assignment of canonical classes.
std::uint64_t stable_hash(std::string_view bytes);

}  // namespace critedge
