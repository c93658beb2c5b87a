#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ezeta {

enum class ErrorKind {
  NotPositiveDefinite,
  CapacityExceeded,
  PoleAt,
  DomainError,
  PrecisionExceeded,
  QuadratureFailure,
  ContractError,
  HypothesisViolated,
  RootFindFailure,
  NoStationaryPoint,
  SingularPoint,
  EmptyDomain,
  InvalidScenario,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace ezeta
