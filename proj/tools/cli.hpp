// Copyright 2026 The burnkit Authors
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

#ifndef BURNKIT_TOOLS_CLI_HPP
#define BURNKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace burnkit::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInconclusive = 3;

/// Runs the tool with argv[1..] as `args`. Reads BURNKIT_NODE_BUDGET.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnkit::cli

#endif  // BURNKIT_TOOLS_CLI_HPP
