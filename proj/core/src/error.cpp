#include "finring/error.hpp"

namespace finring {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllFormedTable: return "IllFormedTable";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::UnityLawFails: return "UnityLawFails";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfRangeCoordinate: return "OutOfRangeCoordinate";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::TrivialIdempotent: return "TrivialIdempotent";
    case ErrorCode::NotPrimePowerCharacteristic:
      return "NotPrimePowerCharacteristic";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingProduct: return "MissingProduct";
    case ErrorCode::DuplicateProduct: return "DuplicateProduct";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
  }
  return "Unknown";
}

RingError::RingError(ErrorCode code, const std::string& message,
                     std::vector<Element> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace finring
