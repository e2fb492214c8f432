#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zigzag {

// Every failure the library reports carries one of these kinds so callers
// (the CLI in particular) can map them onto exit codes without string matching.
enum class ErrorKind {
  Parse,
  NotPure,
  DuplicateFacet,
  DuplicateVertexInFacet,
  EmptyInput,
  NotThin,
  NotChamber,
  LevelOutOfRange,
  FaceNotInGraph,
  FaceNotInComplex,
  ParameterOutOfRange,
  NotAFlag,
  NotAShadow,
  Z1Violation,
  Z2Violation,
  TooManyFlags,
  BudgetExceeded,
  LengthTooLarge,
  InvalidCoxeterMatrix,
  NotStringDiagram,
  InvalidPolytope,
  RankOutOfRange,
  RankMismatch,
  NotAPath,
  NotDistanceNormal,
  CorrespondenceFailure,
  VerificationFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Verification failures indicate a broken identity rather than bad input.
  bool is_verification() const noexcept {
    return kind_ == ErrorKind::VerificationFailure || kind_ == ErrorKind::CorrespondenceFailure;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::DuplicateFacet: return "DuplicateFacet";
    case ErrorKind::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotThin: return "NotThin";
    case ErrorKind::NotChamber: return "NotChamber";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::FaceNotInGraph: return "FaceNotInGraph";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotAFlag: return "NotAFlag";
    case ErrorKind::NotAShadow: return "NotAShadow";
    case ErrorKind::Z1Violation: return "Z1Violation";
    case ErrorKind::Z2Violation: return "Z2Violation";
    case ErrorKind::TooManyFlags: return "TooManyFlags";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::LengthTooLarge: return "LengthTooLarge";
    case ErrorKind::InvalidCoxeterMatrix: return "InvalidCoxeterMatrix";
    case ErrorKind::NotStringDiagram: return "NotStringDiagram";
    case ErrorKind::InvalidPolytope: return "InvalidPolytope";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotDistanceNormal: return "NotDistanceNormal";
    case ErrorKind::CorrespondenceFailure: return "CorrespondenceFailure";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace zigzag
