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

// Instance generators from PARTITION, NUMBER PARTITIONING and vertex-cover
// counting, plus exhaustive checkers for the thresholds they produce.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pareto_cover/measures.hpp"

namespace pareto_cover {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

void validate_graph(const Graph& g);

// Decision instance: the question is whether some cover of size k costs
// at most gamma.
struct ThresholdInstance {
  DiscreteProductInstance instance;
  Rational gamma;
};

// Bits of precision used by the k = 2 construction: the least m with
// 2^-m <= beta = alpha^2 / (48 (n+1)), alpha = 2 / sum a.
int partition_k2_precision(const std::vector<std::int64_t>& a);

// Bernoulli instance with 1 - p_i close to e^{-alpha a_i}, c = a, k = 2.
// The rounding inequalities are re-checked at precision m + 8 before
// returning; a failure throws ContractError.
ThresholdInstance partition_to_k2(const std::vector<std::int64_t>& a);

// Exact bounds used by that check: for every i,
// (1 - beta) e^{-alpha a_i} <= 1 - p_i <= (1 + beta) e^{-alpha a_i} and
// (1 - beta)^{n+2} / (alpha e) <= sum a - gamma <= (1 - beta)^n / (alpha e),
// with each e^{-x} bracketed using approx_exp_neg at precision `bits`.
bool partition_k2_bounds_hold(const std::vector<std::int64_t>& a,
                              const ThresholdInstance& t, int bits);

// p_i = a_i / (S L), c = a, k = 3, with L = 2 S^2, S = sum a.
ThresholdInstance partition_to_k3(const std::vector<std::int64_t>& a);

// n = m + 1 and k = t + 2, with L = 13 S^2, p_i = a_i / L^4, c_i = a_i for
// i <= m, p_{m+1} = L^-6, c_{m+1} = 2L and gamma = S^2 / (t L^4) + 6 / L^5.
ThresholdInstance numpart_to_k(int t, const std::vector<std::int64_t>& a);

// Uniform Bernoulli instance on n coordinates with unit costs and the
// cover {1_{V \ e} : e in E} + {1}. The instance has k = |E| + 1.
std::pair<DiscreteProductInstance, Cover> graph_to_cover_gadget(const Graph& g);

// 2^{n-1} (E[c_B] - (n-2)) for the gadget cover. Uses the J-set evaluator
// when |E| + 1 is within the cover cap and atom enumeration otherwise.
Integer count_vertex_covers_via_cost(const Graph& g);

// Answers to the source problems by subset-sum style search.
bool partition_is_yes(const std::vector<std::int64_t>& a);
bool numpart_is_yes(int t, const std::vector<std::int64_t>& a);

enum class CoverFamily {
  kTopPlusOne,     // {b, 1}
  kZeroTopPlusOne, // {0, b, 1}
  kZeroTopPlusAny, // {0, 1} + k - 2 free points
  kExhaustive,     // 1 + k - 1 free points
};

struct SeparationCheck {
  Rational min_cost;
  Cover best;
  std::uint64_t covers = 0;
  bool below_gamma = false;  // min_cost <= gamma
};

// Minimum over covers of the family, on a {0,1} instance whose top point
// is 1. Free points range over {0,1}^n as multisets; runs in parallel.
SeparationCheck check_separation(const ThresholdInstance& t, CoverFamily family);

}  // namespace pareto_cover
