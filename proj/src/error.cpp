#include "purity/error.hpp"

namespace purity {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::TruncationTooSmall: return "truncation-too-small";
    case ErrorKind::NonHermitianInput: return "non-hermitian-input";
    case ErrorKind::InvalidState: return "invalid-state";
    case ErrorKind::ConsistencyViolation: return "consistency-violation";
    case ErrorKind::Io: return "io";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace purity
