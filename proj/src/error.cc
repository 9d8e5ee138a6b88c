// Copyright 2026 The Ordinal Codes Authors
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

#include "ordinal/error.h"

namespace ordinal {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kInvalidRankCode: return "InvalidRankCode";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kDuplicateItem: return "DuplicateItem";
    case ErrorCode::kInvalidAlphabet: return "InvalidAlphabet";
    case ErrorCode::kEmptyAlphabet: return "EmptyAlphabet";
    case ErrorCode::kDegenerateFrequencies: return "DegenerateFrequencies";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kTruncatedCode: return "TruncatedCode";
    case ErrorCode::kEmptyCue: return "EmptyCue";
    case ErrorCode::kUnknownUnit: return "UnknownUnit";
    case ErrorCode::kUnknownZ: return "UnknownZ";
    case ErrorCode::kEmptyCodebook: return "EmptyCodebook";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ordinal
