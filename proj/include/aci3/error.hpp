#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aci3 {

enum class ErrorCode {
  // betti_core
  NotSubmodule,
  CannotCancel,
  NegativeValue,
  InvalidArgument,
  // gorenstein3
  NotOddLength,
  NonPositiveDegree,
  ThetaNotIntegral,
  GaetaViolation,
  ProviderContract,
  // aci3
  NotAciRanks,
  NonIntegralDstar,
  NonPositiveDstar,
  DualNotEmbedded,
  DstarNotAGenerator,
  F2PrimeMismatch,
  SumIdentityViolation,
  LinkedSequenceInvalid,
  // monomial3
  PreconditionViolation,
  NonMinimalGenerators,
  NotType2,
  NotType3,
  CharacterizationFailed,
  TooManyGenerators,
  NotArtinian,
  // liaison
  CodimMismatch,
  NotGorensteinTail,
  ThetaMismatch,
  GeneratorDegreeTooHigh,
  // oracle_lab
  NotArtinianWithinBound,
  BoundTooSmall,
  NotContained,
  DegreeBelowIdeal,
  NoConsistentDegreeMatrix,
  SamplingFailed,
  DegreeCapExceeded,
  // io
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code distinguishes the
// failure, the message names the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aci3
