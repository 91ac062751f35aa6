// Copyright 2026 The pareto-cover Authors
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

#include <ostream>
#include <string>
#include <vector>

#include "pareto_cover/reductions.hpp"

namespace pareto_cover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitOracle = 4;

// Runs one command line (without the program name). JSON goes to `out`
// unless -o is given; messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "n:u-v,u-v,..." with 0-based nodes, e.g. "3:0-1,1-2,0-2".
Graph parse_graph(const std::string& text);

}  // namespace pareto_cover::cli
