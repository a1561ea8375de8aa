#pragma once

#include <stdexcept>
#include <string>

namespace zignorm {

/// Error kinds map onto CLI exit codes, so they are part of the contract.
enum class ErrorKind {
  DimensionMismatch,
  IndexError,
  ArgumentError,
  CompositionError,
  AddressError,
  SignatureError,
  GlobularityError,
  BudgetExceeded,
  ParseError,
  ValidationError,
};

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw KernelError(kind, message);
}

}  // namespace zignorm
