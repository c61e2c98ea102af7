#include "aci3/error.hpp"

namespace aci3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSubmodule: return "NotSubmodule";
    case ErrorCode::CannotCancel: return "CannotCancel";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotOddLength: return "NotOddLength";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::ThetaNotIntegral: return "ThetaNotIntegral";
    case ErrorCode::GaetaViolation: return "GaetaViolation";
    case ErrorCode::ProviderContract: return "ProviderContract";
    case ErrorCode::NotAciRanks: return "NotAciRanks";
    case ErrorCode::NonIntegralDstar: return "NonIntegralDstar";
    case ErrorCode::NonPositiveDstar: return "NonPositiveDstar";
    case ErrorCode::DualNotEmbedded: return "DualNotEmbedded";
    case ErrorCode::DstarNotAGenerator: return "DstarNotAGenerator";
    case ErrorCode::F2PrimeMismatch: return "F2PrimeMismatch";
    case ErrorCode::SumIdentityViolation: return "SumIdentityViolation";
    case ErrorCode::LinkedSequenceInvalid: return "LinkedSequenceInvalid";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::NonMinimalGenerators: return "NonMinimalGenerators";
    case ErrorCode::NotType2: return "NotType2";
    case ErrorCode::NotType3: return "NotType3";
    case ErrorCode::CharacterizationFailed: return "CharacterizationFailed";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::CodimMismatch: return "CodimMismatch";
    case ErrorCode::NotGorensteinTail: return "NotGorensteinTail";
    case ErrorCode::ThetaMismatch: return "ThetaMismatch";
    case ErrorCode::GeneratorDegreeTooHigh: return "GeneratorDegreeTooHigh";
    case ErrorCode::NotArtinianWithinBound: return "NotArtinianWithinBound";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::DegreeBelowIdeal: return "DegreeBelowIdeal";
    case ErrorCode::NoConsistentDegreeMatrix: return "NoConsistentDegreeMatrix";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace aci3
