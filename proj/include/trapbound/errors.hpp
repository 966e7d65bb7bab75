#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trapbound {

enum class ErrorKind {
  InvalidInput,
  Resonance,
  UnreachableBranch,
  NoConvergence,
  NoInteriorMinimum,
  BracketInvalid,
  NoMetastableState,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace trapbound
