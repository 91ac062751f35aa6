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

// Geometric query grids and the reduction from oracle-defined instances to
// discrete ones.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pareto_cover/measures.hpp"

namespace pareto_cover {

// 0, e*a, e*a(1+e), ..., e*a(1+e)^(M-1), 1 with M = ceil(log_{1+e} 1/(e*a)).
struct QueryGrid {
  Rational epsilon;
  Rational alpha;
  std::vector<Rational> values;

  // Number of interior points.
  int interior() const { return static_cast<int>(values.size()) - 2; }
};

// Throws ValidationError unless epsilon and alpha lie in (0,1).
QueryGrid query_coordinates(const Rational& epsilon, const Rational& alpha);

// Interior size M of the grid without building it.
std::int64_t query_grid_size(const Rational& epsilon, const Rational& alpha);

// Every coordinate replaced by the smallest grid value not below it.
Cover round_cover_up(const Cover& cover, const QueryGrid& grid);

// True when every coordinate of the cover is a grid value.
bool is_on_grid(const Cover& cover, const QueryGrid& grid);

struct FptasParameters {
  Rational epsilon;    // gamma / (60 n), the discretization step
  Rational inner_eps;  // gamma / 15, the accuracy handed to the discrete solver
};

FptasParameters fptas_parameters(const Rational& gamma, int n);

// Largest gamma accepted before clamping: 1 - 2^-20.
Rational max_gamma();

struct Discretization {
  DiscreteProductInstance instance;
  QueryGrid grid;
  Rational gamma;               // after clamping
  std::vector<std::string> warnings;
};

// Queries oracle i on (q_{l-1}, q_l] for l = 0..M+1 (q_{-1} = -1) with
// accuracy epsilon = gamma/(60 n) and normalizes each row to sum to 1.
// Negative answers or a row total outside [(1+e)^-1, 1+e] raise
// OracleContractError. gamma >= 1 is clamped to max_gamma() with a warning.
Discretization discretize(const ContinuousInstance& instance, const Rational& gamma);

}  // namespace pareto_cover
