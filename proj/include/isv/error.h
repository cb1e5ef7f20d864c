// Copyright 2026 The ISV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISV_ERROR_H_
#define ISV_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace isv {

enum class ErrorCode {
  kDuplicateCoalition,
  kNonzeroEmptySet,
  kPlayerOutOfRange,
  kEmptySupportCoalition,
  kPlayerCountMismatch,
  kLengthMismatch,
  kNegativePayoff,
  kNotIndivisible,
  kTooManyPlayers,
  kEmptyFeasibleSet,
  kInvalidRange,
  kInvalidArgument,
  kDegenerateTotal,
  kAlphaOutOfRange,
  kNegativeDividend,
  kNonIntegerResidue,
  kNoBallots,
  kAllZeroVotes,
  kParseError,
  // Failures on the black-box side. The CLI reports these with exit status 2.
  kOracleFailure,
  kSpawnFailure,
  kProtocolViolation,
  kChildExited,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for errors raised while talking to a value oracle.
bool IsOracleError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the error-code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace isv

#endif  // ISV_ERROR_H_
