#include "trapbound/errors.hpp"

namespace trapbound {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Resonance: return "resonance";
    case ErrorKind::UnreachableBranch: return "unreachable-branch";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::NoInteriorMinimum: return "no-interior-minimum";
    case ErrorKind::BracketInvalid: return "bracket-invalid";
    case ErrorKind::NoMetastableState: return "no-metastable-state";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace trapbound
