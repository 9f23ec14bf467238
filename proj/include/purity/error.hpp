#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace purity {

enum class ErrorKind {
  InvalidDimension,
  Domain,
  Shape,
  TruncationTooSmall,
  NonHermitianInput,
  InvalidState,
  ConsistencyViolation,
  Io,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace purity
