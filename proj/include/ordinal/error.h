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

#ifndef ORDINAL_ERROR_H_
#define ORDINAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordinal {

// Failure categories shared by every module. The CLI maps each one to a
// machine-readable name and an exit code.
enum class ErrorCode {
  kEmptySequence,
  kInvalidRankCode,
  kLengthMismatch,
  kUnsupported,
  kDuplicateItem,
  kInvalidAlphabet,
  kEmptyAlphabet,
  kDegenerateFrequencies,
  kUnknownSymbol,
  kTruncatedCode,
  kEmptyCue,
  kUnknownUnit,
  kUnknownZ,
  kEmptyCodebook,
  kPreconditionViolation,
  kInvalidArgument,
  kUnknownSuite,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordinal

#endif  // ORDINAL_ERROR_H_
