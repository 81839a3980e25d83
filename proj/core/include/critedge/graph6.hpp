#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critedge/graph.hpp"

namespace critedge {

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and a trailing
/// CR are accepted; only the single-byte header (n <= 62) is supported.
Graph parse_graph6(std::string_view record);

/// Encoding under the current labeling.
std::string write_graph6(const Graph& g);

struct Graph6Record {
  std::string line;
  std::size_t origin = 0;  // 1-based line number
};

struct Diagnostic {
  std::size_t line = 0;
  std::string reason;
};

/// Lazily reads line-delimited graph6 from a stream. Malformed lines are kept
/// as diagnostics (never dropped); blank lines are skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in);
  /// "-" reads standard input. Throws IoError when the file cannot be opened.
  static Graph6Reader open(const std::string& path);

  Graph6Reader(Graph6Reader&&) noexcept;
  Graph6Reader& operator=(Graph6Reader&&) noexcept;
  ~Graph6Reader();

  std::optional<Graph> next();
  /// Like next() but also exposes the raw record.
  std::optional<std::pair<Graph6Record, Graph>> next_record();

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  std::size_t lines_read() const { return line_no_; }

 private:
  Graph6Reader() = default;
  std::unique_ptr<std::istream> owned_;
  std::istream* in_ = nullptr;
  std::string path_;
  std::size_t line_no_ = 0;
  std::vector<Diagnostic> diagnostics_;
};

/// Reads all records at once; diagnostics are appended to `diagnostics`.
std::vector<Graph> read_graph6_all(std::istream& in, std::vector<Diagnostic>* diagnostics = nullptr);

}  // namespace critedge
