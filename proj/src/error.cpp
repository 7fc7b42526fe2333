#include "rotayb/error.hpp"

namespace rotayb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
  case ErrorCode::NotSymmetric: return "NotSymmetric";
  case ErrorCode::NotAnIdeal: return "NotAnIdeal";
  case ErrorCode::NotInvariant: return "NotInvariant";
  case ErrorCode::DegenerateForm: return "DegenerateForm";
  case ErrorCode::NonRationalSpectrum: return "NonRationalSpectrum";
  case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  case ErrorCode::NotRotaBaxter: return "NotRotaBaxter";
  case ErrorCode::NotBothRotaBaxter: return "NotBothRotaBaxter";
  case ErrorCode::ZeroWeight: return "ZeroWeight";
  case ErrorCode::NotSimple: return "NotSimple";
  case ErrorCode::MixedZeroNonzeroWeights: return "MixedZeroNonzeroWeights";
  case ErrorCode::ZeroTargetWeight: return "ZeroTargetWeight";
  case ErrorCode::UnknownEntry: return "UnknownEntry";
  case ErrorCode::TheoremContradiction: return "TheoremContradiction";
  }
  return "Unknown";
}

} // namespace rotayb
