#include "critedge/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "critedge/error.hpp"
#include "critedge/version.hpp"
#include <nlohmann/json.hpp>

namespace critedge {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict VerificationReport::verdict() const {
  if (violation_count > 0) return Verdict::Violated;
  if (inconclusive_count > 0) return Verdict::Inconclusive;
  return Verdict::Holds;
}

namespace {

template <typename T>
void insert_capped(std::vector<T>& list, T item, std::size_t cap) {
  auto it = std::lower_bound(list.begin(), list.end(), item,
                             [](const T& a, const T& b) { return a.g6 < b.g6; });
  if (it != list.end() && it->g6 == item.g6) return;
  list.insert(it, std::move(item));
  if (list.size() > cap) list.pop_back();
}

bool better(OptimumSense sense, double a, double b) {
  return sense == OptimumSense::Max ? a > b : a < b;
}

bool within_window(OptimumSense sense, double score, double optimum, double window) {
  switch (sense) {
    case OptimumSense::None: return true;
    case OptimumSense::Max: return score >= optimum - window;
    case OptimumSense::Min: return score <= optimum + window;
  }
  return true;
}

void prune_witnesses(VerificationReport& r) {
  if (r.sense == OptimumSense::None || !r.optimum) return;
  std::erase_if(r.extremal_witnesses, [&](const ExtremalWitness& w) {
    return !within_window(r.sense, w.score, *r.optimum, r.tie_window);
  });
}

std::set<std::uint64_t> parse_shard_list(const std::string& text) {
  std::set<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoull(item));
  }
  return out;
}

std::string format_shard_list(const std::set<std::uint64_t>& shards) {
  std::string out;
  for (auto s : shards) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

}  // namespace

void VerificationReport::add_violation(ViolationRecord v) {
  ++violation_count;
  insert_capped(violations, std::move(v), witness_cap);
}

void VerificationReport::add_inconclusive(ViolationRecord v) {
  ++inconclusive_count;
  insert_capped(inconclusive, std::move(v), witness_cap);
}

bool VerificationReport::could_be_extremal(double score) const {
  if (sense == OptimumSense::None || !optimum) return true;
  return within_window(sense, score, *optimum, tie_window);
}

bool VerificationReport::offer_witness(const ExtremalWitness& w) {
  if (sense != OptimumSense::None) {
    if (!optimum || better(sense, w.score, *optimum)) {
      optimum = w.score;
      prune_witnesses(*this);
    }
    if (!within_window(sense, w.score, *optimum, tie_window)) return false;
  }
  insert_capped(extremal_witnesses, w, witness_cap);
  return true;
}

void VerificationReport::add_note(std::string note) {
  auto it = std::lower_bound(notes.begin(), notes.end(), note);
  if (it != notes.end() && *it == note) return;
  notes.insert(it, std::move(note));
}

void set_shard_params(ValueMap& params, std::uint64_t shard_count, std::uint64_t shard_index) {
  params["shard_count"] = static_cast<std::int64_t>(shard_count);
  params["shards"] = std::to_string(shard_index);
}

VerificationReport merge(const VerificationReport& a, const VerificationReport& b) {
  if (a.target != b.target) throw Error(ErrorKind::InvalidArgument, "cannot merge reports of different targets");
  if (a.sense != b.sense || a.tie_window != b.tie_window || a.witness_cap != b.witness_cap) {
    throw Error(ErrorKind::InvalidArgument, "cannot merge reports with different witness settings");
  }
  ValueMap pa = a.params;
  ValueMap pb = b.params;
  std::set<std::uint64_t> shards;
  std::int64_t shard_count = 1;
  const bool sharded = pa.contains("shards") || pb.contains("shards");
  if (sharded) {
    if (!pa.contains("shards") || !pb.contains("shards") || pa["shard_count"] != pb["shard_count"]) {
      throw Error(ErrorKind::InvalidArgument, "cannot merge reports with different shard counts");
    }
    shard_count = std::get<std::int64_t>(pa["shard_count"]);
    const auto sa = parse_shard_list(std::get<std::string>(pa["shards"]));
    const auto sb = parse_shard_list(std::get<std::string>(pb["shards"]));
    for (auto s : sb) {
      if (sa.contains(s)) throw Error(ErrorKind::InvalidArgument, "cannot merge overlapping shards");
    }
    shards = sa;
    shards.insert(sb.begin(), sb.end());
    for (auto* p : {&pa, &pb}) {
      p->erase("shards");
      p->erase("shard_count");
    }
  }
  if (pa != pb) throw Error(ErrorKind::InvalidArgument, "cannot merge reports with different parameters");

  VerificationReport out = a;
  out.params = pa;
  if (sharded) {
    if (static_cast<std::int64_t>(shards.size()) == shard_count) {
      set_shard_params(out.params, 1, 0);
    } else {
      out.params["shard_count"] = shard_count;
      out.params["shards"] = format_shard_list(shards);
    }
  }
  out.scanned += b.scanned;
  out.filtered += b.filtered;
  out.violation_count += b.violation_count;
  for (const auto& v : b.violations) insert_capped(out.violations, v, out.witness_cap);
  out.inconclusive_count += b.inconclusive_count;
  for (const auto& v : b.inconclusive) insert_capped(out.inconclusive, v, out.witness_cap);
  if (b.optimum && (!out.optimum || better(out.sense, *b.optimum, *out.optimum))) {
    out.optimum = b.optimum;
    out.optimum_at = b.optimum_at;
  } else if (b.optimum && *b.optimum == *out.optimum && !b.optimum_at.empty() &&
             (out.optimum_at.empty() || b.optimum_at < out.optimum_at)) {
    out.optimum_at = b.optimum_at;
  }
  prune_witnesses(out);
  for (const auto& w : b.extremal_witnesses) {
    if (out.could_be_extremal(w.score)) insert_capped(out.extremal_witnesses, w, out.witness_cap);
  }
  for (const auto& [key, value] : b.summary) {
    auto it = out.summary.find(key);
    if (it == out.summary.end()) {
      out.summary.emplace(key, value);
    } else if (it->second != value) {
      throw Error(ErrorKind::InvalidArgument, "cannot merge reports with conflicting summary '" + key + "'");
    }
  }
  out.report_only = a.report_only || b.report_only;
  for (const auto& note : b.notes) out.add_note(note);
  out.elapsed = a.elapsed + b.elapsed;
  return out;
}

// ---- JSON ----

namespace {

json value_to_json(const Value& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

Value value_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw Error(ErrorKind::InvalidArgument, "unsupported JSON value in report");
}

json map_to_json(const ValueMap& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = value_to_json(v);
  return out;
}

ValueMap map_from_json(const json& j) {
  ValueMap out;
  for (const auto& [k, v] : j.items()) out.emplace(k, value_from_json(v));
  return out;
}

json records_to_json(const std::vector<ViolationRecord>& list) {
  json out = json::array();
  for (const auto& v : list) out.push_back({{"g6", v.g6}, {"values", map_to_json(v.values)}});
  return out;
}

std::vector<ViolationRecord> records_from_json(const json& j) {
  std::vector<ViolationRecord> out;
  for (const auto& item : j) out.push_back({item.at("g6").get<std::string>(), map_from_json(item.at("values"))});
  return out;
}

std::string_view sense_name(OptimumSense s) {
  switch (s) {
    case OptimumSense::None: return "none";
    case OptimumSense::Max: return "max";
    case OptimumSense::Min: return "min";
  }
  return "none";
}

OptimumSense sense_from_name(const std::string& s) {
  if (s == "max") return OptimumSense::Max;
  if (s == "min") return OptimumSense::Min;
  if (s == "none") return OptimumSense::None;
  throw Error(ErrorKind::InvalidArgument, "unknown optimum sense '" + s + "'");
}

}  // namespace

std::string to_json(const VerificationReport& r, bool include_elapsed) {
  json j;
  j["tool_version"] = kToolVersion;
  j["target"] = r.target;
  j["params"] = map_to_json(r.params);
  j["scanned"] = r.scanned;
  j["filtered"] = r.filtered;
  j["verdict"] = std::string(to_string(r.verdict()));
  j["report_only"] = r.report_only;
  j["violation_count"] = r.violation_count;
  j["violations"] = records_to_json(r.violations);
  j["inconclusive_count"] = r.inconclusive_count;
  j["inconclusive"] = records_to_json(r.inconclusive);
  j["optimum_sense"] = std::string(sense_name(r.sense));
  j["optimum"] = r.optimum ? json(*r.optimum) : json(nullptr);
  if (!r.optimum_at.empty()) j["optimum_at"] = map_to_json(r.optimum_at);
  j["tie_window"] = r.tie_window;
  json witnesses = json::array();
  for (const auto& w : r.extremal_witnesses) {
    witnesses.push_back({{"g6", w.g6},
                         {"score", w.score},
                         {"rho", {{"value", w.rho_value}, {"lower", w.rho_lower}, {"upper", w.rho_upper}}},
                         {"e", w.edges},
                         {"booksize", w.booksize}});
  }
  j["extremal_witnesses"] = std::move(witnesses);
  j["witness_cap"] = r.witness_cap;
  j["summary"] = map_to_json(r.summary);
  j["notes"] = r.notes;
  if (include_elapsed) j["elapsed"] = r.elapsed;
  return j.dump(2);
}

VerificationReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report JSON: ") + e.what());
  }
  try {
    VerificationReport r;
    r.target = j.at("target").get<std::string>();
    r.params = map_from_json(j.at("params"));
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.filtered = j.at("filtered").get<std::uint64_t>();
    r.report_only = j.at("report_only").get<bool>();
    r.violation_count = j.at("violation_count").get<std::uint64_t>();
    r.violations = records_from_json(j.at("violations"));
    r.inconclusive_count = j.at("inconclusive_count").get<std::uint64_t>();
    r.inconclusive = records_from_json(j.at("inconclusive"));
    r.sense = sense_from_name(j.at("optimum_sense").get<std::string>());
    if (!j.at("optimum").is_null()) r.optimum = j.at("optimum").get<double>();
    if (j.contains("optimum_at")) r.optimum_at = map_from_json(j.at("optimum_at"));
    r.tie_window = j.at("tie_window").get<double>();
    for (const auto& w : j.at("extremal_witnesses")) {
      ExtremalWitness ew;
      ew.g6 = w.at("g6").get<std::string>();
      ew.score = w.at("score").get<double>();
      ew.rho_value = w.at("rho").at("value").get<double>();
      ew.rho_lower = w.at("rho").at("lower").get<double>();
      ew.rho_upper = w.at("rho").at("upper").get<double>();
      ew.edges = w.at("e").get<std::int64_t>();
      ew.booksize = w.at("booksize").get<std::int64_t>();
      r.extremal_witnesses.push_back(std::move(ew));
    }
    r.witness_cap = j.at("witness_cap").get<std::size_t>();
    r.summary = map_from_json(j.at("summary"));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("elapsed")) r.elapsed = j.at("elapsed").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("report JSON missing field: ") + e.what());
  }
}

std::string csv_header() {
  return "target,verdict,report_only,scanned,filtered,violations,inconclusive,optimum,witnesses,elapsed";
}

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << r.target << ',' << to_string(r.verdict()) << ',' << (r.report_only ? "true" : "false") << ','
      << r.scanned << ',' << r.filtered << ',' << r.violation_count << ',' << r.inconclusive_count << ',';
  if (r.optimum) out << json(*r.optimum).dump();
  out << ',' << r.extremal_witnesses.size() << ',' << r.elapsed;
  return out.str();
}

}  // namespace critedge
