// Copyright 2026 The eaqecc Authors
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

#ifndef EAQECC_TOOLS_COMMANDS_H
#define EAQECC_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace eaqecc::cli {

/// Exit codes: 0 when every check passed, 1 on a failed check, 2 on bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text rendering of table `id`, regenerated from the family pipeline.
std::string render_table_text(int id);

}  // namespace eaqecc::cli

#endif  // EAQECC_TOOLS_COMMANDS_H
