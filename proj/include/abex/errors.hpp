#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abex {

enum class ErrorCode {
  PoleError,
  ParameterPole,
  NoConvergence,
  DomainError,
  UnsupportedConfiguration,
  ConfigError,
  SubcriticalCharge,
  NoBoundState,
  NoRootInBracket,
  DiscriminantNegative,
  ConditionViolated,
  UndefinedShift,
  NegativeA,
  NonpositiveB,
  ScaleImaginary,
  SubluminalError,
  NegativeRadicand,
  TurningPoint,
  LightconeSingularity,
  BranchPoint,
  DegenerateField,
  NontrivialFluxRequired,
  NoBoundStateFound,
  GridTooCoarse,
  Divergent,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::ParameterPole: return "ParameterPole";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::SubcriticalCharge: return "SubcriticalCharge";
    case ErrorCode::NoBoundState: return "NoBoundState";
    case ErrorCode::NoRootInBracket: return "NoRootInBracket";
    case ErrorCode::DiscriminantNegative: return "DiscriminantNegative";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::UndefinedShift: return "UndefinedShift";
    case ErrorCode::NegativeA: return "NegativeA";
    case ErrorCode::NonpositiveB: return "NonpositiveB";
    case ErrorCode::ScaleImaginary: return "ScaleImaginary";
    case ErrorCode::SubluminalError: return "SubluminalError";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::TurningPoint: return "TurningPoint";
    case ErrorCode::LightconeSingularity: return "LightconeSingularity";
    case ErrorCode::BranchPoint: return "BranchPoint";
    case ErrorCode::DegenerateField: return "DegenerateField";
    case ErrorCode::NontrivialFluxRequired: return "NontrivialFluxRequired";
    case ErrorCode::NoBoundStateFound: return "NoBoundStateFound";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::Divergent: return "Divergent";
  }
  return "Unknown";
}

}  // namespace abex
