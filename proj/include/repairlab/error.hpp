// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repairlab {

enum class ErrorCode {
  kNotPrime,
  kFieldTooLarge,
  kNotIrreducible,
  kOrderDoesNotDivide,
  kNotEnoughCosets,
  kNotSquare,
  kSingular,
  kShapeMismatch,
  kDivisibilityViolation,
  kTauOutOfRange,
  kInvalidParameters,
  kSingularParityBlock,
  kWrongErasureCount,
  kFieldTooSmall,
  kSubpacketizationBudgetExceeded,
  kLengthExceedsField,
  kTooFewCodewords,
  kDeltaOutOfRange,
  kNotLinear,
  kAlphabetLargerThanInner,
  kNoQualifyingField,
  kNotACodeword,
  kUnderdetermined,
  kInconsistent,
  kRepairMatrixRankDeficient,
  kTOutOfRange,
  kRIsOne,
  kIncompleteScheme,
  kSpecParseError,
  kMalformedDump,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace repairlab
