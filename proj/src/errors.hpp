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

#ifndef FAIRCONF_ERRORS_HPP_
#define FAIRCONF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fairconf {

enum class ErrorCode {
  kDimensionMismatch,
  kRangeViolation,
  kSlotOverlap,
  kTooManyTalks,
  kParseError,
  kIoError,
  kUnknownTalkId,
  kUnknownSlotId,
  kInvalidDims,
  kDegenerateNormalization,
  kAllZero,
  kBudgetExceeded,
  kSlotsExhausted,
  kInfeasible,
  kNumericalFailure,
  kInvalidArgument,
};

// Stable machine-readable name, e.g. "RangeViolation". Used in error JSON
// and in the C API.
const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fairconf

#endif  // FAIRCONF_ERRORS_HPP_
