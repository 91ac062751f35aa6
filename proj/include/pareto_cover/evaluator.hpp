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

// Exact expected cost of a cover under a product measure.
//
// For a sample x let J^i(x) be the set of cover indices whose first i
// coordinates dominate those of x. The distribution of J^i over subsets of
// {1..k} is built one coordinate at a time, and the expected cost is
// sum over nonempty J of Pr[J^n = J] * min_{j in J} c.b^j.
//
// Subsets are bitmasks: point j (0-based) is bit j.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "pareto_cover/measures.hpp"
#include "pareto_cover/rational.hpp"

namespace pareto_cover {

struct JSetDistribution {
  int stage = 0;                 // 1-based coordinate index
  std::vector<Rational> masses;  // size 2^k, indexed by subset bitmask

  int k() const;
  Rational total() const;
};

// Distribution of J^1: masses[J] is the mass of
// (max_{j not in J} b^j_1, min_{j in J} b^j_1].
JSetDistribution j_stage_init(std::span<const Rational> b_firsts,
                              const IntervalMassFn& mass);

// J^{i-1} -> J^i: masses[J] = sum over L containing J of
// prev[L] * mass((max_{j in L\J} b^j_i, min_{j in J} b^j_i]).
JSetDistribution j_stage_step(const JSetDistribution& prev,
                              std::span<const Rational> b_iths,
                              const IntervalMassFn& mass);

// c.b for every point of the cover.
std::vector<Rational> point_costs(std::span<const Rational> costs,
                                  const Cover& cover);

// Final J-set distribution for the cover. Covers of any size up to the
// configured cap are accepted.
JSetDistribution final_distribution(const DiscreteProductInstance& instance,
                                    const Cover& cover);
JSetDistribution final_distribution(const ContinuousInstance& instance,
                                    const Cover& cover);

bool is_pareto_cover(const DiscreteProductInstance& instance, const Cover& cover);

// Mass of samples that no cover point dominates.
Rational uncovered_mass(const DiscreteProductInstance& instance,
                        const Cover& cover);

// Throws InfeasibleCoverError when some mass stays uncovered.
Rational expected_cost(const DiscreteProductInstance& instance,
                       const Cover& cover);
// Requires every oracle to be exact (ContractError otherwise).
Rational expected_cost(const ContinuousInstance& instance, const Cover& cover);

// Evaluates many covers in parallel. feasible[t] is false when cover t leaves
// mass uncovered; costs[t] is then 0.
struct BatchResult {
  std::vector<Rational> costs;
  std::vector<bool> feasible;
};
BatchResult expected_costs(const DiscreteProductInstance& instance,
                           std::span<const Cover> covers);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Sums min{c.b : x <= b} * Pr[x] over the whole (M+2)^n sample grid.
// Throws ResourceError above `cap` sample points.
Rational expected_cost_naive(const DiscreteProductInstance& instance,
                             const Cover& cover,
                             std::uint64_t cap = kDefaultEnumerationCap);

// sum_i c_i E[X_i] (discrete) and alpha * sum_i c_i (continuous).
Rational cost_lower_bound(const DiscreteProductInstance& instance);
Rational cost_lower_bound(const ContinuousInstance& instance);

// Replaces every coordinate by the largest grid value not above it.
Cover snap_cover_down(const DiscreteProductInstance& instance, const Cover& cover);

// Opt-in floating evaluation with `precision_bits` of mantissa. Not used by
// any acceptance check.
mpf_class expected_cost_float(const DiscreteProductInstance& instance,
                              const Cover& cover, unsigned precision_bits = 256);

}  // namespace pareto_cover
