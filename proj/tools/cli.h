// Copyright 2026 The ceoff Authors.
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

#ifndef CEOFF_TOOLS_CLI_H_
#define CEOFF_TOOLS_CLI_H_

#include <ostream>

namespace ceoff::cli {

// Exit codes: 0 success, 2 invalid input, 1 internal or I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Entry point behind the `ceoff` binary. Results go to `out`, diagnostics
// to `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ceoff::cli

#endif  // CEOFF_TOOLS_CLI_H_
