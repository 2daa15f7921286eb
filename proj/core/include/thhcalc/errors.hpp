#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thhcalc {

enum class ErrorCode {
  InvalidPrime,
  InvalidGenerator,
  CompositionNonzero,
  DimensionMismatch,
  ParityViolation,
  DuplicateName,
  UnknownName,
  MixedSpec,
  DegreeMismatch,
  UnsupportedKind,
  UnsupportedShape,
  NotADifferential,
  BidegreeViolation,
  LeibnizConflict,
  FamilyViolation,
  DimMismatch,
  ExtensionDegreeError,
  NonTermination,
  InexactAt,
  UnknownScenario,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thhcalc
