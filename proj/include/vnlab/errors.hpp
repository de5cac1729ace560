#pragma once

#include <stdexcept>
#include <string>

namespace vnlab {

// Hard precondition violations and internal contract breaches throw.
// Documented partial-operation outcomes (undefined sums, missing halves,
// incompatible restrictions) are returned as values, not thrown.

struct CapacityExceeded : std::runtime_error {
  explicit CapacityExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct AmbientMismatch : std::invalid_argument {
  explicit AmbientMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct TruncationLimit : std::runtime_error {
  explicit TruncationLimit(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive check contradicts a structural guarantee the
// library relies on (e.g. two distinct halves of the same element).
struct InternalCheckFailure : std::logic_error {
  explicit InternalCheckFailure(const std::string& what) : std::logic_error(what) {}
};

struct UsageError : std::runtime_error {
  int line = 0;  // 0 when not tied to a config line
  UsageError(const std::string& what, int lineNo = 0)
      : std::runtime_error(lineNo > 0 ? "line " + std::to_string(lineNo) + ": " + what : what),
        line(lineNo) {}
};

}  // namespace vnlab
