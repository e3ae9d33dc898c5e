#include "cjac/error.hpp"

namespace cjac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorCode::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorCode::InvalidElementSet: return "InvalidElementSet";
    case ErrorCode::AlreadyNormal: return "AlreadyNormal";
    case ErrorCode::DOutOfRange: return "DOutOfRange";
    case ErrorCode::NotContainingConductor: return "NotContainingConductor";
    case ErrorCode::WrongColength: return "WrongColength";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::RankDrop: return "RankDrop";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
    case ErrorCode::HypothesisNotApplicable: return "HypothesisNotApplicable";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cjac
