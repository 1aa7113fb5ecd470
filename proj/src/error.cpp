#include "linkstar/error.hpp"

namespace linkstar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::PointNotOnComplex: return "PointNotOnComplex";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::GammaPlacementFailed: return "GammaPlacementFailed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TupleNotOnComplex: return "TupleNotOnComplex";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SameSideInput: return "SameSideInput";
    case ErrorCode::DegenerateK: return "DegenerateK";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::PointNotInT: return "PointNotInT";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace linkstar
