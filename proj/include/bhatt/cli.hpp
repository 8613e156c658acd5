// Copyright 2026 The bhatt Authors.
//
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

#ifndef BHATT_CLI_HPP
#define BHATT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bhatt::cli {

// Exit codes, stable across releases.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCm = 2;      // cmcheck --strict, verdict not-CM
inline constexpr int kExitUsage = 64;     // bad command line
inline constexpr int kExitData = 65;      // unreadable or malformed input
inline constexpr int kExitDomain = 66;    // computation refused or failed
inline constexpr int kExitInternal = 70;  // invariant violation; a bug

/// Runs one command. `args` excludes the program name; `in` backs the '-'
/// input path. Reports are written to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace bhatt::cli

#endif  // BHATT_CLI_HPP
