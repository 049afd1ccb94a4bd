#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domaincheck {

enum class ErrorKind {
  Cycle,
  DuplicateElement,
  UnknownElement,
  NotDirected,
  BackendUnsupported,
  NonRepresentableSet,
  PreconditionFailed,
  NoWitness,
  NotQuasiContinuous,
  NotDirectedFamily,
  IndexMismatch,
  InvalidNet,
  NetClassTooSmall,
  TooLarge,
  UnknownSuite,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and tests)
/// can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace domaincheck
