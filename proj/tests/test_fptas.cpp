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

#include <functional>
#include <set>

#include "doctest.h"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/evaluator.hpp"
#include "pareto_cover/fptas.hpp"
#include "test_support.hpp"

using namespace pareto_cover;
using pareto_cover::testing::frac;
using pareto_cover::testing::q;
using pareto_cover::testing::Rng;

namespace {

// Exhaustive optimum: every choice of k-1 grid points plus a^*.
Rational brute_optimum(const DiscreteProductInstance& inst) {
  const int n = inst.n();
  const int k = inst.k();
  const int g = inst.grid_size();
  std::vector<Point> all;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Point p;
    for (int v : idx) p.push_back(inst.grid()[static_cast<std::size_t>(v)]);
    all.push_back(std::move(p));
    int t = 0;
    while (t < n && ++idx[static_cast<std::size_t>(t)] == g) idx[static_cast<std::size_t>(t++)] = 0;
    if (t == n) break;
  }
  bool found = false;
  Rational best;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k - 1), 0);
  std::function<void(int, std::size_t)> rec = [&](int depth, std::size_t from) {
    if (depth == k - 1) {
      Cover cover;
      for (auto s : pick) cover.points.push_back(all[s]);
      cover.points.push_back(inst.a_star());
      const Rational c = expected_cost(inst, cover);
      if (!found || c < best) best = c;
      found = true;
      return;
    }
    for (std::size_t s = from; s < all.size(); ++s) {
      pick[static_cast<std::size_t>(depth)] = s;
      rec(depth + 1, s);
    }
  };
  rec(0, 0);
  return best;
}

FptasOptions reference_options() {
  FptasOptions o;
  o.kernel = Kernel::kReference;
  return o;
}

bool tables_equal(const FptasRun& a, const FptasRun& b) {
  if (a.stages.size() != b.stages.size()) return false;
  for (std::size_t s = 0; s < a.stages.size(); ++s) {
    if (a.stages[s].stage != b.stages[s].stage) return false;
    if (a.stages[s].entries != b.stages[s].entries) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("delta and column numbering") {
  CHECK(fptas_delta(q("1/2"), 3) == q("1/24"));
  CHECK_THROWS_AS(fptas_delta(q("1/2"), 0), ValidationError);

  DiscreteProductInstance inst({0, q("1/2"), 1}, {{q("1/2"), q("1/2"), 0}, {0, 0, 1}},
                               {1, 1}, 3);
  CHECK(column_count(inst, {}, 1) == 9);
  CHECK(decode_column(inst, 1, 0) == std::vector<int>{0, 0, 1});
  CHECK(decode_column(inst, 1, 5) == std::vector<int>{1, 2, 1});
  CHECK(decode_column(inst, 2, 8) == std::vector<int>{2, 2, 2});
  FptasOptions pruned;
  pruned.symmetry_pruning = true;
  CHECK(column_count(inst, pruned, 1) == 6);
  CHECK(column_count(inst, pruned, 2) == 9);
}

TEST_CASE("seed with k = 1 has a single candidate") {
  DiscreteProductInstance inst({0, q("1/3"), 1}, {{q("1/4"), q("3/4"), 0}}, {2}, 1);
  const Rational delta = q("1/8");
  const StageTable t = seed_candidates(inst, delta);
  REQUIRE(t.size() == 1);
  const Candidate& c = t.entries[0].candidate;
  CHECK(c.probs[0].is_zero());
  CHECK(c.probs[1] == ExponentOrZero::power(0));
  CHECK(c.costs[0] == round_to_power(q("2/3"), delta));
}

TEST_CASE("seed on the two-point grid with k = 2") {
  DiscreteProductInstance inst({0, 1}, {{q("1/4"), q("3/4")}, {q("1/2"), q("1/2")}},
                               {1, 1}, 2);
  const Rational delta = q("1/10");
  const StageTable t = seed_candidates(inst, delta);
  REQUIRE(t.size() == 2);
  // beta^1 = 0 keeps mass 1/4 on {1,2} and 3/4 on {2}; beta^1 = 1 keeps all on {1,2}.
  std::vector<Candidate> expected;
  Candidate zero_col{1,
                     {ExponentOrZero::zero(), ExponentOrZero::zero(),
                      round_to_power(q("3/4"), delta), round_to_power(q("1/4"), delta)},
                     {ExponentOrZero::zero(), ExponentOrZero::power(0)}};
  Candidate one_col{1,
                    {ExponentOrZero::zero(), ExponentOrZero::zero(), ExponentOrZero::zero(),
                     ExponentOrZero::power(0)},
                    {ExponentOrZero::power(0), ExponentOrZero::power(0)}};
  CHECK(t.entries[0].candidate == std::min(zero_col, one_col));
  CHECK(t.entries[1].candidate == std::max(zero_col, one_col));
}

TEST_CASE("seed on a three-value grid matches the rounded stage-1 distribution") {
  DiscreteProductInstance inst({0, q("1/2"), 1}, {{q("1/5"), q("3/10"), q("1/2")}}, {3}, 3);
  const Rational delta = q("1/20");
  const StageTable t = seed_candidates(inst, delta);
  std::set<Candidate> got;
  for (const auto& e : t.entries) got.insert(e.candidate);
  std::set<Candidate> want;
  for (int b1 = 0; b1 < 3; ++b1) {
    for (int b2 = 0; b2 < 3; ++b2) {
      const std::vector<Rational> firsts{inst.grid()[b1], inst.grid()[b2], Rational(1)};
      const auto dist = j_stage_init(firsts, inst.coordinate_mass(0));
      Candidate c;
      c.stage = 1;
      for (const auto& m : dist.masses) c.probs.push_back(round_to_power(m, delta));
      for (const auto& f : firsts) c.costs.push_back(round_to_power(3 * f, delta));
      want.insert(c);
    }
  }
  CHECK(got == want);
  CHECK(t.size() == want.size());
}

TEST_CASE("candidate cost") {
  const Rational delta = q("1/4");
  Candidate empty{2, {ExponentOrZero::zero(), ExponentOrZero::zero()}, {ExponentOrZero::power(3)}};
  CHECK(candidate_cost(empty, delta, 2) == 0);

  // P_{2} = 1, C = (ZERO, 1): 1 * (5/4)^1.
  Candidate c{1,
              {ExponentOrZero::zero(), ExponentOrZero::zero(), ExponentOrZero::power(0),
               ExponentOrZero::power(-1)},
              {ExponentOrZero::zero(), ExponentOrZero::power(1)}};
  // {1,2} has min cost ZERO and contributes nothing.
  CHECK(candidate_cost(c, delta, 1) == q("5/4"));
  CHECK_THROWS_AS(candidate_cost(c, delta, 2), ContractError);
}

TEST_CASE("reference and parallel kernels build identical tables") {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const int k = rng.uniform_int(1, 3);
    const auto inst = rng.discrete_instance(n, rng.uniform_int(1, 3), k);
    const Rational eps = frac(rng.uniform_int(1, 9), 10);
    FptasOptions par;
    par.symmetry_pruning = rng.coin();
    FptasOptions ref = reference_options();
    ref.symmetry_pruning = par.symmetry_pruning;
    const FptasRun a = run_fptas(inst, eps, ref);
    const FptasRun b = run_fptas(inst, eps, par);
    CHECK(tables_equal(a, b));
    CHECK(a.expansions == b.expansions);
  }
}

TEST_CASE("tables are sorted, duplicate free and reproducible") {
  Rng rng(7);
  const auto inst = rng.discrete_instance(3, 2, 3);
  const FptasRun a = run_fptas(inst, q("1/3"));
  const FptasRun b = run_fptas(inst, q("1/3"));
  CHECK(tables_equal(a, b));
  for (const auto& t : a.stages) {
    for (std::size_t s = 1; s < t.size(); ++s) {
      CHECK(t.entries[s - 1].candidate < t.entries[s].candidate);
    }
  }
}

TEST_CASE("rounded candidates bracket the exact values of their witness") {
  Rng rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const int k = rng.uniform_int(1, 3);
    const auto inst = rng.discrete_instance(n, rng.uniform_int(1, 3), k);
    const FptasRun run = run_fptas(inst, q("1/2"));
    const Rational base = 1 + run.delta;
    for (int stage = 1; stage <= n; ++stage) {
      const auto& table = run.stages[static_cast<std::size_t>(stage - 1)];
      const Rational slack = pow_rational(base, stage);
      for (std::size_t e = 0; e < table.size(); ++e) {
        const Cover w = witness(run, inst, stage, e);
        const ExactCandidate exact = exact_candidate(inst, w, stage);
        const Candidate& c = table.entries[e].candidate;
        for (std::size_t s = 0; s < c.probs.size(); ++s) {
          const Rational r = c.probs[s].value(base);
          CHECK(r <= exact.probs[s]);
          CHECK(exact.probs[s] <= r * slack);
        }
        for (std::size_t j = 0; j < c.costs.size(); ++j) {
          const Rational r = c.costs[j].value(base);
          CHECK(r <= exact.costs[j]);
          CHECK(exact.costs[j] <= r * slack);
        }
      }
    }
  }
}

TEST_CASE("solution is within 1 + eps of the exhaustive optimum") {
  Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(1, 3);
    const int k = rng.uniform_int(1, 3);
    const auto inst = rng.discrete_instance(n, rng.uniform_int(1, 2), k);
    const Rational eps = frac(rng.uniform_int(1, 5), 10);
    const DiscreteSolution sol = solve_discrete(inst, eps);
    const Rational opt = brute_optimum(inst);
    CHECK(sol.cost >= opt);
    CHECK(sol.cost <= (1 + eps) * opt);
    CHECK(is_pareto_cover(inst, sol.cover));
    CHECK(sol.cover.size() == k);
    CHECK(sol.cover.points.back() == inst.a_star());
    CHECK(sol.candidate_cost <= sol.cost);
    CHECK(sol.diagnostics.bound_holds);
    std::uint64_t total = 0;
    for (auto s : sol.diagnostics.table_sizes) total += s;
    CHECK(total == sol.diagnostics.total_candidates);
  }
}

TEST_CASE("table bound") {
  DiscreteProductInstance inst({0, q("1/4"), 1}, {{q("1/2"), q("1/4"), q("1/4")}, {0, 1, 0}},
                               {1, 2}, 2);
  const Rational delta = q("1/8");
  const TableBound b = table_size_bound(inst, delta);
  // floor_log_{9/8}(4) = 11, floor_log_{9/8}(3) = 9.
  CHECK(b.alpha_floor == 2 + 2 + 2 * 11);
  CHECK(b.beta_floor == 2 + 2 + 9 + 11);
  REQUIRE(b.value.has_value());
  CHECK(*b.value == Integer(26 * 26 * 26 * 26) * 24 * 24 * 2);

  DiscreteProductInstance free_coord({0, 1}, {{q("1/2"), q("1/2")}}, {0}, 2);
  CHECK_FALSE(table_size_bound(free_coord, delta).value.has_value());
}

TEST_CASE("zero top value forces the all-zero cover") {
  DiscreteProductInstance inst({0, q("1/2"), 1}, {{1, 0, 0}, {1, 0, 0}}, {3, 5}, 2);
  const DiscreteSolution sol = solve_discrete(inst, q("1/2"));
  CHECK(sol.cost == 0);
  CHECK(sol.cover.points.back() == Point{0, 0});
}

TEST_CASE("k = 1 returns a^*") {
  Rng rng(3);
  const auto inst = rng.discrete_instance(3, 2, 1);
  const DiscreteSolution sol = solve_discrete(inst, q("1/4"));
  CHECK(sol.cover.points == std::vector<Point>{inst.a_star()});
  CHECK(sol.cost == expected_cost(inst, sol.cover));
  for (auto s : sol.diagnostics.table_sizes) CHECK(s == 1);
}

TEST_CASE("argument and budget errors") {
  Rng rng(9);
  const auto inst = rng.discrete_instance(2, 2, 2);
  CHECK_THROWS_AS(solve_discrete(inst, 0), ValidationError);
  CHECK_THROWS_AS(solve_discrete(inst, 1), ValidationError);
  FptasOptions tight;
  tight.max_expansions = 3;
  CHECK_THROWS_AS(solve_discrete(inst, q("1/2"), tight), ResourceError);
  CHECK_THROWS_AS(solve_discrete(inst.with_k(13), q("1/2")), ResourceError);

  const FptasRun run = run_fptas(inst, q("1/2"));
  CHECK_THROWS_AS(extend_candidates(run.stages[0], inst, 3, run.delta), ContractError);

  // Two stages of 4 columns each: 8 expansions at the very least.
  FptasOptions exact_budget;
  exact_budget.max_expansions = run.expansions;
  CHECK(run_fptas(inst, q("1/2"), exact_budget).expansions == run.expansions);
  exact_budget.max_expansions = run.expansions - 1;
  CHECK_THROWS_AS(run_fptas(inst, q("1/2"), exact_budget), ResourceError);
  FptasOptions below_floor;
  below_floor.max_expansions = 7;
  try {
    run_fptas(inst, q("1/2"), below_floor);
    FAIL("expected ResourceError");
  } catch (const ResourceError& ex) {
    CHECK(std::string(ex.what()).find("at least 8") != std::string::npos);
  }
}

TEST_CASE("continuous solve on uniform coordinates") {
  std::vector<OraclePtr> oracles{uniform_oracle()};
  ContinuousInstance inst(std::move(oracles), {1}, 2, q("1/2"));
  const ContinuousSolution sol = solve_continuous(inst, q("1/2"));
  REQUIRE(sol.continuous_cost.has_value());
  // One coordinate, k = 2: b^2 + (1 - b) is minimal at b = 1/2.
  CHECK(*sol.continuous_cost >= q("3/4"));
  CHECK(*sol.continuous_cost <= q("3/4") * q("3/2"));
  CHECK(sol.inner_eps == q("1/30"));
  CHECK(sol.gamma == q("1/2"));
}
