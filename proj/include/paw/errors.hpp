#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paw {

enum class Errc {
  NotHermitian,
  ConvergenceFailure,
  DimensionMismatch,
  InvalidTriplet,
  InvalidState,
  ZeroField,
  BadStepCount,
  AperiodicHamiltonian,
  DegenerateConditional,
  BadDimension,
  NoZeroEnergySector,
  IndexOutOfRange,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidTriplet: return "InvalidTriplet";
    case Errc::InvalidState: return "InvalidState";
    case Errc::ZeroField: return "ZeroField";
    case Errc::BadStepCount: return "BadStepCount";
    case Errc::AperiodicHamiltonian: return "AperiodicHamiltonian";
    case Errc::DegenerateConditional: return "DegenerateConditional";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NoZeroEnergySector: return "NoZeroEnergySector";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()` names the kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace paw
