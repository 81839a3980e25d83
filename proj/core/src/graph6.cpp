#include "critedge/graph6.hpp"

#include <fstream>
#include <iostream>
#include <istream>

namespace critedge {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";
constexpr std::string_view kSparse6Prefix = ">>sparse6<<";
constexpr std::string_view kDigraph6Prefix = ">>digraph6<<";

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (!record.empty() && record.back() == '\r') record.remove_suffix(1);
  if (record.starts_with(kSparse6Prefix) || record.starts_with(':')) {
    throw Error(ErrorKind::UnsupportedFormat, "sparse6 records are not supported");
  }
  if (record.starts_with(kDigraph6Prefix) || record.starts_with('&')) {
    throw Error(ErrorKind::UnsupportedFormat, "digraph6 records are not supported");
  }
  if (record.starts_with(kGraph6Prefix)) record.remove_prefix(kGraph6Prefix.size());
  if (record.empty()) throw Error(ErrorKind::TruncatedRecord, "empty record");

  const auto header = static_cast<unsigned char>(record[0]);
  if (header == 126) {
    throw Error(ErrorKind::OrderCap, "multi-byte graph6 header (n > 62) is not supported");
  }
  if (header < 63 || header > 125) {
    throw Error(ErrorKind::BadHeader, "header byte " + std::to_string(header) + " outside [63, 125]");
  }
  const int n = header - 63;
  if (n == 0) throw Error(ErrorKind::BadHeader, "graph order 0 is not supported");

  const std::string_view body = record.substr(1);
  const std::size_t expected = body_length(n);
  if (body.size() < expected) {
    throw Error(ErrorKind::TruncatedRecord, "expected " + std::to_string(expected) + " data bytes, got " +
                                                std::to_string(body.size()));
  }
  if (body.size() > expected) {
    throw Error(ErrorKind::TrailingData, std::to_string(body.size() - expected) + " bytes after graph data");
  }

  std::vector<std::uint64_t> rows(n, 0);
  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t bit = 0;
  int i = 0;
  int j = 1;
  for (std::size_t pos = 0; pos < body.size(); ++pos) {
    const auto byte = static_cast<unsigned char>(body[pos]);
    if (byte < 63 || byte > 126) {
      throw Error(ErrorKind::InvalidByte, "data byte " + std::to_string(byte) + " at offset " +
                                              std::to_string(pos + 1) + " outside [63, 126]");
    }
    const unsigned value = byte - 63U;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1U;
      if (bit >= total_bits) {
        if (set) throw Error(ErrorKind::NonzeroPadding, "padding bits must be zero");
        continue;
      }
      if (set) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(n, rows);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(63 + n));
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph6Reader::Graph6Reader(std::istream& in) : in_(&in) {}

Graph6Reader Graph6Reader::open(const std::string& path) {
  Graph6Reader reader;
  reader.path_ = path;
  if (path == "-") {
    reader.in_ = &std::cin;
    return reader;
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  reader.in_ = file.get();
  reader.owned_ = std::move(file);
  return reader;
}

Graph6Reader::Graph6Reader(Graph6Reader&&) noexcept = default;
Graph6Reader& Graph6Reader::operator=(Graph6Reader&&) noexcept = default;
Graph6Reader::~Graph6Reader() = default;

std::optional<std::pair<Graph6Record, Graph>> Graph6Reader::next_record() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      return std::make_pair(Graph6Record{std::move(line), line_no_}, std::move(g));
    } catch (const Error& e) {
      diagnostics_.push_back({line_no_, e.what()});
    }
  }
  if (in_->bad()) {
    throw Error(ErrorKind::IoError, "read failure" + (path_.empty() ? std::string() : " on '" + path_ + "'"));
  }
  return std::nullopt;
}

std::optional<Graph> Graph6Reader::next() {
  auto rec = next_record();
  if (!rec) return std::nullopt;
  return std::move(rec->second);
}

std::vector<Graph> read_graph6_all(std::istream& in, std::vector<Diagnostic>* diagnostics) {
  Graph6Reader reader(in);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  if (diagnostics) {
    diagnostics->insert(diagnostics->end(), reader.diagnostics().begin(), reader.diagnostics().end());
  }
  return out;
}

}  // namespace critedge
