#include "critedge/enumerate.hpp"

#include <algorithm>
#include <string>

#include "critedge/graph6.hpp"

namespace critedge {

void validate(const EnumerationSpec& spec) {
  if (spec.n < 1) throw Error(ErrorKind::InvalidArgument, "enumeration order must be at least 1");
  if (spec.n > kLabeledEnumerationMaxOrder) {
    throw Error(ErrorKind::OrderCap, "labeled enumeration supports n <= " +
                                         std::to_string(kLabeledEnumerationMaxOrder) +
                                         "; supply a graph6 stream for larger orders");
  }
  if (spec.shard_count < 1) throw Error(ErrorKind::InvalidArgument, "shard_count must be >= 1");
  if (spec.shard_index >= spec.shard_count) {
    throw Error(ErrorKind::InvalidArgument, "shard_index must be < shard_count");
  }
}

std::uint64_t stable_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

LabeledEnumerator::LabeledEnumerator(const EnumerationSpec& spec) : spec_(spec) {
  validate(spec);
  end_mask_ = std::uint64_t{1} << pair_count(spec.n);
  next_mask_ = spec.mode == EnumerationMode::Labeled ? spec.shard_index : 0;
}

std::optional<Graph> LabeledEnumerator::next() {
  if (spec_.mode == EnumerationMode::Labeled) {
    if (next_mask_ >= end_mask_) return std::nullopt;
    Graph g = Graph::from_upper_mask(spec_.n, next_mask_);
    next_mask_ += spec_.shard_count;
    return g;
  }
  while (next_mask_ < end_mask_) {
    Graph g = Graph::from_upper_mask(spec_.n, next_mask_++);
    Graph canon = canonical_graph(g);
    std::string code = write_graph6(canon);
    auto it = std::lower_bound(seen_.begin(), seen_.end(), code);
    if (it != seen_.end() && *it == code) continue;
    seen_.insert(it, code);
    if (stable_hash(code) % spec_.shard_count != spec_.shard_index) continue;
    return canon;
  }
  return std::nullopt;
}

void LabeledEnumerator::for_each_mask(const EnumerationSpec& spec,
                                      const std::function<bool(std::uint64_t)>& visit) {
  validate(spec);
  if (spec.mode != EnumerationMode::Labeled) {
    throw Error(ErrorKind::InvalidArgument, "for_each_mask requires labeled mode");
  }
  const std::uint64_t end = std::uint64_t{1} << pair_count(spec.n);
  for (std::uint64_t m = spec.shard_index; m < end; m += spec.shard_count) {
    if (!visit(m)) return;
  }
}

}  // namespace critedge
