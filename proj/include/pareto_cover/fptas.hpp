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

// Rounded-candidate dynamic program for the discrete problem.
//
// A stage-i candidate holds, for one family of partial covers, the rounded
// probabilities P_J = Pr[J^i(x) = J] and rounded prefix costs
// C_j = sum_{l <= i} c_l b^j_l. Every value is stored as the exponent of the
// largest power of 1 + delta not above it (or ZERO), delta = eps / (4n).
// Stage i is built from stage i-1 by trying every column (beta^1..beta^k) of
// grid values with beta^k = a^*_i. The last cover point is always a^*.
//
// Two kernels produce identical tables: a direct rational reference
// (serial) and an integer kernel that runs in parallel with OpenMP.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pareto_cover/measures.hpp"
#include "pareto_cover/numerics.hpp"

namespace pareto_cover {

struct Candidate {
  int stage = 0;
  std::vector<ExponentOrZero> probs;  // indexed by subset bitmask, size 2^k
  std::vector<ExponentOrZero> costs;  // indexed by cover point, size k

  // Key order: probabilities first, then costs, lexicographically.
  friend auto operator<=>(const Candidate&, const Candidate&) = default;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

std::string to_string(const Candidate& c);

// One stored candidate. The witness is kept as a back reference: the
// parent's index in the previous stage table plus the index of the beta
// column in lexicographic order over grid^(k-1).
struct StageEntry {
  Candidate candidate;
  std::int64_t parent = -1;  // -1 at stage 1
  std::uint64_t column = 0;

  friend bool operator==(const StageEntry&, const StageEntry&) = default;
};

// Entries sorted by candidate key.
struct StageTable {
  int stage = 0;
  std::vector<StageEntry> entries;

  std::size_t size() const { return entries.size(); }
};

enum class Kernel { kReference, kParallel };

inline constexpr std::uint64_t kDefaultMaxExpansions = 20'000'000;

struct FptasOptions {
  Kernel kernel = Kernel::kParallel;
  // Stage-1 columns restricted to beta^1 <= ... <= beta^(k-1). Experimental
  // and off by default; no approximation guarantee is claimed with it.
  bool symmetry_pruning = false;
  // Cap on (stored candidate, column) expansions summed over all stages.
  std::uint64_t max_expansions = kDefaultMaxExpansions;
};

// eps / (4n), exactly.
Rational fptas_delta(const Rational& eps, int n);

// Number of columns tried at a stage: (M+2)^(k-1), or the sorted subset
// when pruning.
std::uint64_t column_count(const DiscreteProductInstance& instance,
                           const FptasOptions& options, int stage);

// Grid indices of beta^1..beta^k for a column at a stage (1-based stage).
// Columns are numbered lexicographically over grid^(k-1) with beta^1 most
// significant; pruning skips numbers but never renumbers.
std::vector<int> decode_column(const DiscreteProductInstance& instance, int stage,
                               std::uint64_t column);

StageTable seed_candidates(const DiscreteProductInstance& instance,
                           const Rational& delta, const FptasOptions& options = {});

StageTable extend_candidates(const StageTable& prev,
                             const DiscreteProductInstance& instance, int stage,
                             const Rational& delta, const FptasOptions& options = {});

// Sum over nonempty J of P_J * min_{j in J} C_j. Requires stage == n.
Rational candidate_cost(const Candidate& c, const Rational& delta, int n);

// Unrounded Cand^i(B): exact stage-i J-set masses and prefix costs.
struct ExactCandidate {
  std::vector<Rational> probs;
  std::vector<Rational> costs;
};
ExactCandidate exact_candidate(const DiscreteProductInstance& instance,
                               const Cover& cover, int stage);

struct FptasRun {
  Rational delta;
  std::vector<StageTable> stages;  // stages[i-1] is stage i
  std::uint64_t expansions = 0;
};

// Seed plus n-1 extensions. Throws ResourceError when k exceeds the cover
// cap or the expansion budget would be exceeded. The sum of the per-stage
// column counts is checked against the budget before stage 1 starts.
FptasRun run_fptas(const DiscreteProductInstance& instance, const Rational& eps,
                   const FptasOptions& options = {});

// Witness cover of entry `index` of stage `stage` (1-based).
Cover witness(const FptasRun& run, const DiscreteProductInstance& instance,
              int stage, std::size_t index);

struct TableBound {
  // Integer lower estimate of alpha^(2^k) beta^k n, built from floors of
  // the logarithms; empty when a zero cost makes the bound infinite.
  std::optional<Integer> value;
  Integer alpha_floor;
  Integer beta_floor;
};
TableBound table_size_bound(const DiscreteProductInstance& instance,
                            const Rational& delta);

struct FptasDiagnostics {
  Rational delta;
  std::vector<std::uint64_t> table_sizes;
  std::uint64_t total_candidates = 0;
  std::uint64_t expansions = 0;
  TableBound bound;
  bool bound_holds = true;
};

struct DiscreteSolution {
  Cover cover;
  Rational cost;            // exact expected cost of the returned cover
  Rational candidate_cost;  // rounded cost of the selected candidate
  FptasDiagnostics diagnostics;
};

// Cover within a factor 1 + eps of the optimum, eps in (0,1).
DiscreteSolution solve_discrete(const DiscreteProductInstance& instance,
                                const Rational& eps, const FptasOptions& options = {});

struct ContinuousSolution {
  Cover cover;
  Rational discrete_cost;                   // cost under the discretized instance
  std::optional<Rational> continuous_cost;  // when every oracle is exact
  Rational gamma;                           // after clamping
  Rational inner_eps;
  int grid_interior = 0;
  std::vector<std::string> warnings;
  FptasDiagnostics diagnostics;
};

// Discretizes with gamma, then solves with gamma / 15.
ContinuousSolution solve_continuous(const ContinuousInstance& instance,
                                    const Rational& gamma,
                                    const FptasOptions& options = {});

}  // namespace pareto_cover
