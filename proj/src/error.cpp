// SPDX-License-Identifier: Apache-2.0

#include "repairlab/error.hpp"

namespace repairlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kOrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::kNotEnoughCosets: return "NotEnoughCosets";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kDivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::kTauOutOfRange: return "TauOutOfRange";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kSingularParityBlock: return "SingularParityBlock";
    case ErrorCode::kWrongErasureCount: return "WrongErasureCount";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kSubpacketizationBudgetExceeded: return "SubpacketizationBudgetExceeded";
    case ErrorCode::kLengthExceedsField: return "LengthExceedsField";
    case ErrorCode::kTooFewCodewords: return "TooFewCodewords";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kNotLinear: return "NotLinear";
    case ErrorCode::kAlphabetLargerThanInner: return "AlphabetLargerThanInner";
    case ErrorCode::kNoQualifyingField: return "NoQualifyingField";
    case ErrorCode::kNotACodeword: return "NotACodeword";
    case ErrorCode::kUnderdetermined: return "Underdetermined";
    case ErrorCode::kInconsistent: return "Inconsistent";
    case ErrorCode::kRepairMatrixRankDeficient: return "RepairMatrixRankDeficient";
    case ErrorCode::kTOutOfRange: return "TOutOfRange";
    case ErrorCode::kRIsOne: return "RIsOne";
    case ErrorCode::kIncompleteScheme: return "IncompleteScheme";
    case ErrorCode::kSpecParseError: return "SpecParseError";
    case ErrorCode::kMalformedDump: return "MalformedDump";
  }
  return "Unknown";
}

}  // namespace repairlab
