#include "ezeta/error.hpp"

namespace ezeta {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::ContractError: return "ContractError";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::RootFindFailure: return "RootFindFailure";
    case ErrorKind::NoStationaryPoint: return "NoStationaryPoint";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
  }
  return "Unknown";
}

}  // namespace ezeta
