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

#include "doctest.h"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/evaluator.hpp"
#include "pareto_cover/oracle.hpp"
#include "pareto_cover/reductions.hpp"
#include "test_support.hpp"

using namespace pareto_cover;
using pareto_cover::testing::q;
using pareto_cover::testing::Rng;

namespace {

using Numbers = std::vector<std::int64_t>;

// Vertex covers by checking every node subset.
std::uint64_t count_covers_directly(const Graph& g) {
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
    bool ok = true;
    for (const auto& [u, v] : g.edges) ok = ok && ((s >> u & 1u) || (s >> v & 1u));
    count += ok ? 1 : 0;
  }
  return count;
}

Graph random_graph(Rng& rng, int n) {
  Graph g{n, {}};
  const double density = rng.uniform_int(1, 9) / 10.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin(density)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

// Subset enumeration for PARTITION.
bool split_exists(const Numbers& a) {
  std::int64_t total = 0;
  for (auto v : a) total += v;
  for (std::uint32_t s = 0; s < (1u << a.size()); ++s) {
    std::int64_t part = 0;
    for (std::size_t i = 0; i < a.size(); ++i) part += (s >> i & 1u) ? a[i] : 0;
    if (2 * part == total) return true;
  }
  return false;
}

// Every assignment of numbers to t labelled parts.
bool parts_exist(int t, const Numbers& a) {
  std::int64_t total = 0;
  for (auto v : a) total += v;
  if (total % t != 0) return false;
  std::vector<int> label(a.size(), 0);
  while (true) {
    std::vector<std::int64_t> load(static_cast<std::size_t>(t), 0);
    for (std::size_t i = 0; i < a.size(); ++i) load[static_cast<std::size_t>(label[i])] += a[i];
    bool ok = true;
    for (auto l : load) ok = ok && l * t == total;
    if (ok) return true;
    std::size_t i = 0;
    while (i < a.size() && ++label[i] == t) label[i++] = 0;
    if (i == a.size()) return false;
  }
}

// Sum a - sum_{I} a_i prod_{I} (1 - p_i), minimized over I: the cost of
// {b, 1} with b zero exactly on I.
Rational k2_minimum(const Numbers& a, const DiscreteProductInstance& inst) {
  Rational total = 0;
  for (auto v : a) total += static_cast<long>(v);
  Rational best = total;
  for (std::uint32_t s = 0; s < (1u << a.size()); ++s) {
    Rational part = 0;
    Rational stay = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(s >> i & 1u)) continue;
      part += static_cast<long>(a[i]);
      stay *= inst.probs()[i][0];
    }
    best = std::min(best, Rational(total - part * stay));
  }
  return best;
}

// All multisets of positive integers with at most max_n elements and sum
// at most max_sum.
std::vector<Numbers> all_instances(int max_n, int max_sum) {
  std::vector<Numbers> out;
  Numbers cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t from, std::int64_t left) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_n) return;
    for (std::int64_t v = from; v <= left; ++v) {
      cur.push_back(v);
      rec(v, left - v);
      cur.pop_back();
    }
  };
  rec(1, max_sum);
  return out;
}

}  // namespace

TEST_CASE("binary scorer agrees with the J-set evaluator") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(1, 5);
    const int k = rng.uniform_int(1, 4);
    std::vector<Rational> p, c;
    for (int i = 0; i < n; ++i) {
      p.push_back(rng.unit_rational());
      c.push_back(rng.positive_rational());
    }
    const auto inst = bernoulli_instance(p, c, k);
    const BinaryCoverScorer scorer(inst);
    std::vector<std::uint32_t> masks;
    for (int j = 0; j < k; ++j) masks.push_back(static_cast<std::uint32_t>(rng.uniform_int(0, (1 << n) - 1)));
    const Cover cover = scorer.to_cover(masks);
    if (is_pareto_cover(inst, cover)) {
      CHECK(scorer.cost(masks) == expected_cost(inst, cover));
    } else {
      CHECK_FALSE(scorer.scaled_cost(masks).has_value());
      try {
        scorer.cost(masks);
        FAIL("expected an infeasible cover");
      } catch (const InfeasibleCoverError& e) {
        CHECK(e.uncovered_mass() == uncovered_mass(inst, cover));
      }
    }
  }
}

TEST_CASE("source problem answers") {
  CHECK(partition_is_yes({1, 1}));
  CHECK_FALSE(partition_is_yes({1, 3}));
  CHECK_FALSE(partition_is_yes({1, 2}));
  CHECK(numpart_is_yes(3, {1, 1, 1}));
  CHECK_FALSE(numpart_is_yes(2, {1, 3}));
  CHECK(numpart_is_yes(3, {3, 1, 2, 2, 1}));
  for (const auto& a : all_instances(6, 14)) {
    CHECK(partition_is_yes(a) == split_exists(a));
    for (int t = 2; t <= 3; ++t) CHECK(numpart_is_yes(t, a) == parts_exist(t, a));
  }
}

TEST_CASE("k = 2 construction") {
  CHECK(partition_k2_precision({1, 1}) == 8);  // beta = 1/144
  CHECK_THROWS_AS(partition_to_k2({1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(partition_to_k2({1, 2}), ValidationError);
  CHECK_THROWS_AS(partition_to_k2({0, 2}), ValidationError);

  const auto yes = partition_to_k2({1, 1});
  CHECK(yes.instance.k() == 2);
  CHECK(partition_k2_bounds_hold({1, 1}, yes, 40));
  const auto sep = check_separation(yes, CoverFamily::kTopPlusOne);
  CHECK(sep.below_gamma);
  CHECK(sep.covers == 4);
  CHECK(sep.min_cost == k2_minimum({1, 1}, yes.instance));
  CHECK(check_separation(yes, CoverFamily::kExhaustive).min_cost == sep.min_cost);

  const auto no = partition_to_k2({1, 3});
  CHECK_FALSE(check_separation(no, CoverFamily::kTopPlusOne).below_gamma);
  CHECK_FALSE(check_separation(no, CoverFamily::kExhaustive).below_gamma);
}

TEST_CASE("k = 2 bounds fail for a perturbed instance") {
  const Numbers a{2, 1, 1};
  const auto t = partition_to_k2(a);
  ThresholdInstance shifted{t.instance, t.gamma + q("1/10")};
  CHECK_FALSE(partition_k2_bounds_hold(a, shifted, 30));
}

TEST_CASE("k = 3 construction") {
  CHECK_THROWS_AS(partition_to_k3({1, 2}), ValidationError);
  for (const Numbers& a : {Numbers{1, 1}, Numbers{2, 2}, Numbers{1, 3}, Numbers{3, 1, 2}}) {
    const auto t = partition_to_k3(a);
    CHECK(t.gamma < 1);
    CHECK(t.instance.k() == 3);
    const auto sep = check_separation(t, CoverFamily::kZeroTopPlusOne);
    CHECK(sep.below_gamma == split_exists(a));
    CHECK(check_separation(t, CoverFamily::kExhaustive).below_gamma == split_exists(a));
  }
}

TEST_CASE("number partitioning construction") {
  CHECK_THROWS_AS(numpart_to_k(2, {1, 2}), ValidationError);
  CHECK_THROWS_AS(numpart_to_k(1, {1, 1}), ValidationError);
  const auto t = numpart_to_k(2, {1, 1});
  CHECK(t.instance.k() == 4);
  CHECK(t.instance.n() == 3);
  // L = 52: gamma = 4 / (2 L^4) + 6 / L^5.
  CHECK(t.gamma == Rational(2) / Rational(52 * 52 * 52 * 52) + Rational(6) / Rational(52L * 52 * 52 * 52 * 52));
  CHECK(check_separation(t, CoverFamily::kZeroTopPlusAny).below_gamma);
  CHECK(check_separation(t, CoverFamily::kExhaustive).below_gamma);
  CHECK_FALSE(check_separation(numpart_to_k(2, {1, 3}), CoverFamily::kZeroTopPlusAny).below_gamma);
  CHECK_FALSE(check_separation(numpart_to_k(2, {1, 3}), CoverFamily::kExhaustive).below_gamma);
  CHECK(check_separation(numpart_to_k(3, {1, 1, 1}), CoverFamily::kZeroTopPlusAny).below_gamma);
}

TEST_CASE("separation on small PARTITION instances") {
  for (const auto& a : all_instances(4, 10)) {
    std::int64_t total = 0;
    for (auto v : a) total += v;
    if (total % 2 != 0) continue;
    const bool yes = split_exists(a);
    const auto k2 = partition_to_k2(a);
    const auto s2 = check_separation(k2, CoverFamily::kTopPlusOne);
    CHECK(s2.below_gamma == yes);
    CHECK(s2.min_cost == k2_minimum(a, k2.instance));
    CHECK(check_separation(partition_to_k3(a), CoverFamily::kZeroTopPlusOne).below_gamma == yes);
  }
}

TEST_CASE("family checks reject mismatched k") {
  const auto t = partition_to_k3({1, 1});
  CHECK_THROWS_AS(check_separation(t, CoverFamily::kTopPlusOne), ValidationError);
  const auto k2 = partition_to_k2({1, 1});
  CHECK_THROWS_AS(check_separation(k2, CoverFamily::kZeroTopPlusOne), ValidationError);
}

TEST_CASE("vertex-cover gadget") {
  const Graph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  const auto [inst, cover] = graph_to_cover_gadget(triangle);
  CHECK(cover.size() == 4);
  CHECK(expected_cost(inst, cover) == 2);
  CHECK(count_vertex_covers_via_cost(triangle) == 4);

  const Graph path{3, {{0, 1}, {1, 2}}};
  CHECK(count_vertex_covers_via_cost(path) == 5);

  const Graph edge{2, {{0, 1}}};
  CHECK(count_vertex_covers_via_cost(edge) == 3);

  for (int n = 2; n <= 6; ++n) {
    const Graph empty{n, {}};
    const auto [e_inst, e_cover] = graph_to_cover_gadget(empty);
    CHECK(expected_cost(e_inst, e_cover) == n);
    CHECK(count_vertex_covers_via_cost(empty) == Integer(1u << n));
  }

  CHECK_THROWS_AS(graph_to_cover_gadget(Graph{1, {}}), ValidationError);
  CHECK_THROWS_AS(graph_to_cover_gadget(Graph{3, {{1, 1}}}), ValidationError);
  CHECK_THROWS_AS(graph_to_cover_gadget(Graph{3, {{0, 3}}}), ValidationError);
}

TEST_CASE("vertex-cover identity on random graphs") {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, rng.uniform_int(2, 9));
    CHECK(count_vertex_covers_via_cost(g) == Integer(static_cast<unsigned long>(count_covers_directly(g))));
  }
}
