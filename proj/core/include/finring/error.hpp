#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finring/element.hpp"

namespace finring {

enum class ErrorCode {
  // ring construction
  IllFormedTable,
  NotWellDefined,
  NotAssociative,
  UnityLawFails,
  // element and subset operations
  DimensionMismatch,
  OutOfRangeCoordinate,
  NotAnIdeal,
  SizeLimitExceeded,
  InvalidArgument,
  // constructors and decompositions
  NotMonic,
  NotPrime,
  NotIdempotent,
  NotCentral,
  TrivialIdempotent,
  NotPrimePowerCharacteristic,
  // ring-spec files and the command line
  SyntaxError,
  MissingProduct,
  DuplicateProduct,
  UnknownBuiltin,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. Validation errors carry the
// offending elements (generator triples, pairs, ...) as a witness.
class RingError : public std::runtime_error {
 public:
  RingError(ErrorCode code, const std::string& message,
            std::vector<Element> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

}  // namespace finring
