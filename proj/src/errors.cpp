// Copyright 2026 The FairConf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "errors.hpp"

namespace fairconf {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kRangeViolation:
      return "RangeViolation";
    case ErrorCode::kSlotOverlap:
      return "SlotOverlap";
    case ErrorCode::kTooManyTalks:
      return "TooManyTalks";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kUnknownTalkId:
      return "UnknownTalkId";
    case ErrorCode::kUnknownSlotId:
      return "UnknownSlotId";
    case ErrorCode::kInvalidDims:
      return "InvalidDims";
    case ErrorCode::kDegenerateNormalization:
      return "DegenerateNormalization";
    case ErrorCode::kAllZero:
      return "AllZero";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kSlotsExhausted:
      return "SlotsExhausted";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kNumericalFailure:
      return "NumericalFailure";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace fairconf
