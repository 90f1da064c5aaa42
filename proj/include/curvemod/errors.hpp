#pragma once
// Error taxonomy shared by the whole library. Every throwing operation uses
// Error with a stable code so callers (and the CLI exit-code mapping) can
// react without parsing message strings.

#include <stdexcept>
#include <string>

namespace curvemod {

enum class ErrorCode {
  NotDivisible,           // polynomial division by (1 - t) left a remainder
  EmptySequence,          // a staircase sequence needs at least one entry
  InvalidBettiData,       // negative counts, or exactly one empty side
  InvalidSPoly,           // s(t) not admissible for the requested family
  NotInImage,             // series is not the Hilbert series of any class
  InsufficientTruncation, // too few known coefficients to decide
  KindMismatch,           // operands belong to different algebra kinds
  PointNotInSupport,      // point quotient at a point the divisor misses
  DegreeTooLarge,         // section-space dimension outside the stated range
  ShapeUnavailable,       // generic shape requested for a rejected pair
  CapExceeded,            // CLI resource cap hit
  TruncationExceeded,     // attempted read at or beyond trunc_order
  InvalidArgument,        // anything else a caller got structurally wrong
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace curvemod
