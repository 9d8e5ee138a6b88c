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

#ifndef ORDINAL_TOOLS_CLI_H_
#define ORDINAL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ordinal::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   // a verification or validation answered "no"
  kUsage = 2,         // bad flags, unknown subcommand or suite
  kBadInput = 3,      // input files that do not parse
  kPrecondition = 4,  // a module rejected the input
  kIoFailure = 5,     // files that cannot be read or written
};

// Name of the environment variable holding the directory that relative
// --out paths are resolved against.
inline constexpr const char* kOutDirEnv = "ORDINAL_OUT_DIR";

// Runs the command line (args[0] is the program name). Results go to out
// unless --out names a file; errors go to err as one JSON object.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ordinal::cli

#endif  // ORDINAL_TOOLS_CLI_H_
