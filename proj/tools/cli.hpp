// Copyright 2026 The claka Authors.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace claka::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;          // outcome as expected
inline constexpr int kExitInternal = 1;    // unexpected exception
inline constexpr int kExitUsage = 2;       // bad flags, undefined combos
inline constexpr int kExitIo = 3;          // unreadable/malformed files
inline constexpr int kExitAbort = 4;       // honest party aborted
inline constexpr int kExitUnexpected = 5;  // disagreement, wrong outcome
inline constexpr int kExitCrypto = 6;      // degenerate parameters

// Runs the tool on `args` (without the program name). Reports go to `out`
// unless --out is given; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace claka::cli
