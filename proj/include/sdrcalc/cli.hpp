// Copyright 2026 The sdrcalc Authors
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

namespace sdrcalc {

// Command-line front end (subcommands: info, compose, member, export-sdpa,
// rasterize, sample). `args` excludes the program name. Exit codes:
// 0 = success (for `member`: StrictlyFeasible or EpsFeasible),
// 2 = EpsInfeasible, 1 = usage or runtime error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace sdrcalc
