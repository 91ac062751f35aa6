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

// Exhaustive optima for small instances.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pareto_cover/measures.hpp"

namespace pareto_cover {

struct BruteForceOptions {
  std::uint64_t max_grid_points = 30;  // (M+2)^n
  int max_k = 4;
  bool parallel = true;
};

struct BruteForceResult {
  Cover cover;
  Rational cost;
  std::uint64_t covers_evaluated = 0;
};

// Every multiset of k-1 grid points joined with a^*. Ties go to the
// lexicographically smallest cover; the points of a returned cover are in
// lexicographic order with a^* last.
BruteForceResult brute_force_optimum(const DiscreteProductInstance& instance,
                                     const BruteForceOptions& options = {});

// All points of {a_0..a_{M+1}}^n in lexicographic order.
std::vector<Point> grid_points(const DiscreteProductInstance& instance);

// Search over covers {p, q, (1,1)} of the uniform measure on [0,1]^2 with
// p, q on the lattice {0, 1/N, ..., 1}^2 and cost c1 x + c2 y for
// nonnegative integers c1, c2. Costs are exact: a cover's expected cost is
// score / N^3.
struct LatticeSearchResult {
  std::int64_t score = 0;
  std::int64_t p[2] = {0, 0};
  std::int64_t q[2] = {0, 0};
  std::uint64_t pairs = 0;

  Rational cost(std::int64_t lattice) const;
  Cover cover(std::int64_t lattice) const;
};

// N^3 times the expected cost of {p, q, (N,N)/N}.
std::int64_t lattice_score(std::int64_t lattice, std::int64_t c1, std::int64_t c2,
                           const std::int64_t p[2], const std::int64_t q[2]);

// Minimum over unordered pairs; ties go to the smallest (p, q) in
// lexicographic order with p <= q.
LatticeSearchResult lattice_search_uniform2(std::int64_t lattice, std::int64_t c1,
                                            std::int64_t c2, bool parallel = true);

// Exact costs for instances on the grid {0,1}, scoring covers atom by atom.
// Points are bitmasks with bit i set when coordinate i equals 1.
class BinaryCoverScorer {
 public:
  // Requires grid {0,1} and n <= 24.
  explicit BinaryCoverScorer(const DiscreteProductInstance& instance);

  int n() const { return n_; }

  // Cost times denominator(); empty when some atom of positive mass is
  // not covered.
  std::optional<Integer> scaled_cost(std::span<const std::uint32_t> points) const;
  const Integer& denominator() const { return denominator_; }

  // Throws InfeasibleCoverError for covers that miss mass.
  Rational cost(std::span<const std::uint32_t> points) const;

  Cover to_cover(std::span<const std::uint32_t> points) const;

 private:
  int n_;
  std::vector<std::uint32_t> atoms_;  // atoms of positive mass
  std::vector<Integer> weights_;      // their masses over the weight denominator
  std::vector<Integer> costs_;        // per coordinate, over the cost denominator
  Integer denominator_;
  Integer weight_denominator_;
};

}  // namespace pareto_cover
