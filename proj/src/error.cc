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

#include "isv/error.h"

namespace isv {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateCoalition: return "DuplicateCoalition";
    case ErrorCode::kNonzeroEmptySet: return "NonzeroEmptySet";
    case ErrorCode::kPlayerOutOfRange: return "PlayerOutOfRange";
    case ErrorCode::kEmptySupportCoalition: return "EmptySupportCoalition";
    case ErrorCode::kPlayerCountMismatch: return "PlayerCountMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNegativePayoff: return "NegativePayoff";
    case ErrorCode::kNotIndivisible: return "NotIndivisible";
    case ErrorCode::kTooManyPlayers: return "TooManyPlayers";
    case ErrorCode::kEmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateTotal: return "DegenerateTotal";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kNegativeDividend: return "NegativeDividend";
    case ErrorCode::kNonIntegerResidue: return "NonIntegerResidue";
    case ErrorCode::kNoBallots: return "NoBallots";
    case ErrorCode::kAllZeroVotes: return "AllZeroVotes";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kOracleFailure: return "OracleFailure";
    case ErrorCode::kSpawnFailure: return "SpawnFailure";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kChildExited: return "ChildExited";
  }
  return "Unknown";
}

bool IsOracleError(ErrorCode code) {
  return code == ErrorCode::kOracleFailure ||
         code == ErrorCode::kSpawnFailure ||
         code == ErrorCode::kProtocolViolation ||
         code == ErrorCode::kChildExited;
}

}  // namespace isv
