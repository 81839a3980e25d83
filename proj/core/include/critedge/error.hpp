#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critedge {

enum class ErrorKind {
  InvalidVertex,
  SelfLoop,
  OrderCap,
  InvalidArgument,
  IterationCap,
  EdgelessGraph,
  Disconnected,
  NotBipartiteWithGivenParts,
  BadHeader,
  InvalidByte,
  TruncatedRecord,
  TrailingData,
  NonzeroPadding,
  UnsupportedFormat,
  IoError,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace critedge
