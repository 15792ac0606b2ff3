#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sglue {

enum class ErrorKind {
  Malformed,
  UnknownElement,
  DuplicateElement,
  CycleDetected,
  NotTransitiveReduction,
  NoUniqueJoin,
  NoUniqueMeet,
  NotBounded,
  NotComparable,
  NotModular,
  NotALattice,
  InvalidSystem,
  NotModularSkeleton,
  ChainDependence,
  OverlapDisagreement,
  StarConditionFailed,
  LimitExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotTransitiveReduction: return "NotTransitiveReduction";
    case ErrorKind::NoUniqueJoin: return "NoUniqueJoin";
    case ErrorKind::NoUniqueMeet: return "NoUniqueMeet";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotModular: return "NotModular";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::NotModularSkeleton: return "NotModularSkeleton";
    case ErrorKind::ChainDependence: return "ChainDependence";
    case ErrorKind::OverlapDisagreement: return "OverlapDisagreement";
    case ErrorKind::StarConditionFailed: return "StarConditionFailed";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as a LatticeError
/// carrying a machine-readable kind.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sglue
