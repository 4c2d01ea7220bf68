// Copyright 2026 The hyperslice Authors
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

#ifndef HYPERSLICE_CLI_HPP_
#define HYPERSLICE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hyperslice::cli {

inline constexpr int kExitFull = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitError = 2;

// Default for --workers when the flag is absent.
inline constexpr const char* kWorkersEnv = "HYPERSLICE_WORKERS";

// Runs the command line `hyperslice args...`. Exit codes: 0 when the result
// slices every edge (or the command has no such notion and succeeded), 1 for a
// partial slicing, 2 for any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperslice::cli

#endif  // HYPERSLICE_CLI_HPP_
