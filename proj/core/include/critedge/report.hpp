#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace critedge {

using Value = std::variant<std::int64_t, double, bool, std::string>;
using ValueMap = std::map<std::string, Value>;

enum class Verdict { Holds, Violated, Inconclusive };
std::string_view to_string(Verdict v);

/// Which way the scan optimizes its tracked quantity.
enum class OptimumSense { None, Max, Min };

struct ViolationRecord {
  std::string g6;
  ValueMap values;
};

struct ExtremalWitness {
  std::string g6;
  double score = 0.0;  // the optimized quantity for this scan
  double rho_value = 0.0;
  double rho_lower = 0.0;
  double rho_upper = 0.0;
  std::int64_t edges = 0;
  std::int64_t booksize = 0;
};

inline constexpr std::size_t kDefaultWitnessCap = 64;

/// Machine-readable outcome of one scan or of several merged shard scans.
///
/// Witness lists hold canonical graph6 strings (labeled ones when n > 10),
/// sorted ascending and capped at `witness_cap`; the `*_count` fields count
/// every labeled occurrence. merge() is associative and commutative.
struct VerificationReport {
  std::string target;
  ValueMap params;
  std::uint64_t scanned = 0;
  std::uint64_t filtered = 0;
  std::uint64_t violation_count = 0;
  std::vector<ViolationRecord> violations;
  std::uint64_t inconclusive_count = 0;
  std::vector<ViolationRecord> inconclusive;
  OptimumSense sense = OptimumSense::None;
  std::optional<double> optimum;
  /// Where the optimum was attained, for scans that are not over graphs.
  /// Ties keep the smaller map.
  ValueMap optimum_at;
  double tie_window = 0.0;  // witnesses within this distance of the optimum are kept
  std::vector<ExtremalWitness> extremal_witnesses;
  std::size_t witness_cap = kDefaultWitnessCap;
  /// Scan-level derived quantities (closed forms, margins); merged by key.
  ValueMap summary;
  bool report_only = false;
  std::vector<std::string> notes;  // sorted, deduplicated
  double elapsed = 0.0;

  Verdict verdict() const;

  void add_violation(ViolationRecord v);
  void add_inconclusive(ViolationRecord v);
  /// Offers a candidate for the extremal list; returns true if it is kept.
  bool offer_witness(const ExtremalWitness& w);
  /// True if `score` could enter the extremal list (cheap pre-check).
  bool could_be_extremal(double score) const;
  void add_note(std::string note);
};

/// Combines two reports of the same target and parameters (shard fields may
/// differ). Throws InvalidArgument on mismatch.
VerificationReport merge(const VerificationReport& a, const VerificationReport& b);

std::string to_json(const VerificationReport& r, bool include_elapsed = true);
VerificationReport report_from_json(std::string_view text);

std::string csv_header();
std::string to_csv_row(const VerificationReport& r);

/// Shard bookkeeping shared by params maps: "shard_count" and "shards"
/// (comma-separated sorted indices). A merged set covering every index is
/// normalized back to the unsharded form.
void set_shard_params(ValueMap& params, std::uint64_t shard_count, std::uint64_t shard_index);

}  // namespace critedge
