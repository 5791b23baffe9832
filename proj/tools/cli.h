// Copyright 2026 The vedsum Authors.
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

#ifndef VEDSUM_TOOLS_CLI_H_
#define VEDSUM_TOOLS_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace vedsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitPartial = 2;

// Runs one vedsum command. args[0] is the program name. Returns 0 on
// success, 1 on usage or fatal errors and 2 when a batch finished with some
// clusters failed.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace vedsum::cli

#endif  // VEDSUM_TOOLS_CLI_H_
