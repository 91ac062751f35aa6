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

// Serial reference code against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "pareto_cover/evaluator.hpp"
#include "pareto_cover/fptas.hpp"
#include "pareto_cover/oracle.hpp"

namespace {

using namespace pareto_cover;

// Fixed pseudo-random instance on a grid with `interior` inner values.
DiscreteProductInstance make_instance(int n, int interior, int k, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  std::vector<Rational> grid{Rational(0)};
  for (int l = 1; l <= interior; ++l) {
    Rational v(l, interior + 1);
    v.canonicalize();
    grid.push_back(v);
  }
  grid.emplace_back(1);
  std::vector<std::vector<Rational>> probs;
  std::vector<Rational> costs;
  for (int i = 0; i < n; ++i) {
    std::vector<int> w(grid.size());
    int total = 0;
    for (auto& x : w) total += (x = pick(1, 9));
    std::vector<Rational> row;
    for (int x : w) {
      Rational r(x, total);
      r.canonicalize();
      row.push_back(r);
    }
    probs.push_back(std::move(row));
    costs.emplace_back(pick(1, 9));
  }
  return DiscreteProductInstance(std::move(grid), std::move(probs), std::move(costs), k);
}

void BM_Fptas(benchmark::State& state) {
  const auto inst = make_instance(3, static_cast<int>(state.range(1)), 3, 42);
  FptasOptions options;
  options.kernel = state.range(0) == 0 ? Kernel::kReference : Kernel::kParallel;
  std::uint64_t candidates = 0;
  for (auto _ : state) {
    const FptasRun run = run_fptas(inst, Rational(1, 5), options);
    candidates = run.stages.back().size();
    benchmark::DoNotOptimize(candidates);
  }
  state.SetLabel(state.range(0) == 0 ? "reference" : "parallel");
  state.counters["final_table"] = static_cast<double>(candidates);
}
BENCHMARK(BM_Fptas)
    ->ArgNames({"kernel", "interior"})
    ->ArgsProduct({{0, 1}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto inst = make_instance(2, 3, 3, 7);
  BruteForceOptions options;
  options.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(inst, options).cost);
  state.SetLabel(options.parallel ? "parallel" : "serial");
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Lattice(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice_search_uniform2(state.range(1), 1, 1, parallel).score);
  }
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Lattice)
    ->ArgNames({"parallel", "N"})
    ->ArgsProduct({{0, 1}, {40, 80}})
    ->Unit(benchmark::kMillisecond);

void BM_Evaluator(benchmark::State& state) {
  const auto inst = make_instance(4, 3, 3, 11);
  Cover cover;
  cover.points = {Point{inst.grid()[1], inst.grid()[2], inst.grid()[3], inst.grid()[1]},
                  Point{inst.grid()[3], inst.grid()[1], inst.grid()[2], inst.grid()[2]},
                  inst.a_star()};
  const bool naive = state.range(0) == 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive ? expected_cost_naive(inst, cover)
                                   : expected_cost(inst, cover));
  }
  state.SetLabel(naive ? "naive" : "j-sets");
}
BENCHMARK(BM_Evaluator)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
