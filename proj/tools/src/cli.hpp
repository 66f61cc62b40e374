// Copyright 2026 The dilkit Authors
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

/**
 * @file cli.hpp
 * @brief Command dispatcher for the dilkit tool.
 *
 * Exit codes: 0 all checks passed or output written, 1 a verification
 * failed (witness JSON on standard output), 2 input or usage error.
 */
#ifndef DILKIT_TOOLS_CLI_HPP_
#define DILKIT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dilkit::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dilkit::cli

#endif  // DILKIT_TOOLS_CLI_HPP_
