// Stable names for the error taxonomy.
#include "curvemod/errors.hpp"

namespace curvemod {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::InvalidBettiData: return "InvalidBettiData";
    case ErrorCode::InvalidSPoly: return "InvalidSPoly";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::PointNotInSupport: return "PointNotInSupport";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ShapeUnavailable: return "ShapeUnavailable";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace curvemod
