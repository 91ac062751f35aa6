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

// Staircase pictures of two-dimensional covers.

#pragma once

#include <string>
#include <vector>

#include "pareto_cover/measures.hpp"

namespace pareto_cover::plot {

// Cell (x0, x1] x (y0, y1] of the grid cut at every cover coordinate,
// charged to the cheapest cover point dominating it (first index on ties),
// or to -1 when no point does.
struct Cell {
  Rational x0, x1, y0, y1;
  int owner = -1;
};

// Cells in x-major order. Requires two coordinates and costs of size 2.
std::vector<Cell> dominance_cells(const Cover& cover, const std::vector<Rational>& costs);

std::string cells_csv(const std::vector<Cell>& cells);
std::string cells_svg(const Cover& cover, const std::vector<Cell>& cells);

}  // namespace pareto_cover::plot
