// Copyright 2026 The wbforge Authors.
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
#ifndef WBFORGE_TOOLS_CLI_H_
#define WBFORGE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace wbforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Report and document output goes to out,
// diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace wbforge

#endif  // WBFORGE_TOOLS_CLI_H_
