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

#include "doctest.h"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/measures.hpp"
#include "test_support.hpp"

using namespace pareto_cover;
using pareto_cover::testing::q;
using pareto_cover::testing::Rng;

namespace {

const ExtendedRational kNegInf = ExtendedRational::neg_inf();
const ExtendedRational kPosInf = ExtendedRational::pos_inf();

std::vector<Rational> vec(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(q(x));
  return out;
}

}  // namespace

TEST_CASE("bernoulli instance construction") {
  const auto p = vec({"1/2", "1/2"});
  const auto c = vec({"1", "1"});
  const auto inst = bernoulli_instance(p, c, 2);
  CHECK(inst.n() == 2);
  CHECK(inst.grid_size() == 2);
  CHECK(inst.probs()[0] == vec({"1/2", "1/2"}));
  CHECK(inst.a_star() == Point{1, 1});

  const auto point_mass = bernoulli_instance(vec({"1", "0"}), c, 1);
  CHECK(point_mass.a_star() == Point{1, 0});

  CHECK_THROWS_AS(bernoulli_instance(vec({"3/2"}), vec({"1"}), 1), ValidationError);
  CHECK_THROWS_AS(bernoulli_instance(vec({"1/2"}), vec({"1", "2"}), 1),
                  ValidationError);
}

TEST_CASE("bernoulli singleton masses match the product formula") {
  // p = (1/3, 2/3): Pr[x = (1,0)] = (1/3)(1/3).
  const auto inst = bernoulli_instance(vec({"1/3", "2/3"}), vec({"1", "1"}), 1);
  CHECK(inst.interval_mass(0, 0, 1) * inst.interval_mass(1, -1, 0) == q("1/9"));
  CHECK(inst.interval_mass(0, q("-1"), 0) == q("2/3"));

  Rng rng(5);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i) p.push_back(rng.unit_rational());
    const auto b = bernoulli_instance(p, std::vector<Rational>(n, Rational(1)), 1);
    Rational total = 0;
    for (unsigned x = 0; x < (1u << n); ++x) {
      Rational direct = 1;
      Rational via_mass = 1;
      for (int i = 0; i < n; ++i) {
        const bool one = x >> i & 1u;
        direct *= one ? p[i] : Rational(1 - p[i]);
        via_mass *= one ? b.interval_mass(i, 0, 1) : b.interval_mass(i, -1, 0);
      }
      REQUIRE(direct == via_mass);
      total += direct;
    }
    REQUIRE(total == 1);
  }
}

TEST_CASE("discrete instance validation") {
  const auto g = vec({"0", "1/2", "1"});
  CHECK_NOTHROW(DiscreteProductInstance(g, {vec({"1/4", "1/4", "1/2"})}, vec({"1"}), 1));
  CHECK_THROWS_AS(DiscreteProductInstance(g, {vec({"1/4", "1/4", "1/4"})}, vec({"1"}), 1),
                  ValidationError);
  CHECK_THROWS_AS(DiscreteProductInstance(vec({"0", "1/2", "1/2", "1"}),
                                          {vec({"1/4", "1/4", "1/4", "1/4"})},
                                          vec({"1"}), 1),
                  ValidationError);
  CHECK_THROWS_AS(DiscreteProductInstance(vec({"1/10", "1"}), {vec({"1/2", "1/2"})},
                                          vec({"1"}), 1),
                  ValidationError);
  CHECK_THROWS_AS(DiscreteProductInstance(g, {vec({"1/4", "1/4", "1/2"})},
                                          vec({"-1"}), 1),
                  ValidationError);
  CHECK_THROWS_AS(DiscreteProductInstance(g, {vec({"1/4", "1/4", "1/2"})},
                                          vec({"1"}), 0),
                  ValidationError);
  CHECK_THROWS_AS(DiscreteProductInstance(g, {vec({"-1/4", "3/4", "1/2"})},
                                          vec({"1"}), 1),
                  ValidationError);
}

TEST_CASE("interval mass conventions") {
  const auto inst = DiscreteProductInstance(vec({"0", "1/4", "1/2", "1"}),
                                            {vec({"1/8", "1/8", "1/4", "1/2"})},
                                            vec({"1"}), 1);
  CHECK(inst.interval_mass(0, kNegInf, kPosInf) == 1);
  CHECK(inst.interval_mass(0, q("1/2"), q("1/2")) == 0);
  CHECK(inst.interval_mass(0, q("3/4"), q("1/4")) == 0);
  CHECK(inst.interval_mass(0, kNegInf, 0) == q("1/8"));
  CHECK(inst.interval_mass(0, 0, q("1/3")) == q("1/8"));
  CHECK(inst.interval_mass(0, q("1/4"), kPosInf) == q("3/4"));
  CHECK(inst.interval_mass(0, q("-5"), q("7")) == 1);
  CHECK(inst.mean(0) == q("1/32") + q("1/8") + q("1/2"));
  CHECK(inst.floor_index(q("1/3")) == 1);
  CHECK(inst.floor_index(1) == 3);
  CHECK(inst.top_index(0) == 3);
}

TEST_CASE("interval mass is finitely additive") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto inst = rng.discrete_instance(1, rng.uniform_int(0, 4), 1);
    std::vector<Rational> cuts;
    for (int s = 0; s < 3; ++s) cuts.push_back(rng.unit_rational(20) * 2 - 1);
    std::sort(cuts.begin(), cuts.end());
    REQUIRE(inst.interval_mass(0, cuts[0], cuts[2]) ==
            inst.interval_mass(0, cuts[0], cuts[1]) +
                inst.interval_mass(0, cuts[1], cuts[2]));
    REQUIRE(inst.interval_mass(0, kNegInf, cuts[1]) +
                inst.interval_mass(0, cuts[1], kPosInf) ==
            1);
  }
}

TEST_CASE("uniform oracle") {
  const auto u = uniform_oracle();
  CHECK(u->is_exact());
  CHECK(u->query(-1, 0, q("1/3")) == 0);
  CHECK(u->query(q("1/4"), q("3/4"), q("1/3")) == q("1/2"));
  CHECK(u->query(-1, 1, q("1/3")) == 1);
  CHECK_THROWS_AS(u->query(q("1/2"), q("1/2"), q("1/3")), ValidationError);
  CHECK_THROWS_AS(u->query(q("-2"), q("1/2"), q("1/3")), ValidationError);
  CHECK_THROWS_AS(u->query(0, 1, 1), ValidationError);
}

TEST_CASE("finite support oracle") {
  const auto two = finite_support_oracle({{0, q("1/2")}, {1, q("1/2")}});
  CHECK(two->query(-1, 0, q("1/2")) == q("1/2"));
  const auto top = finite_support_oracle({{1, 1}});
  CHECK(top->query(0, 1, q("1/2")) == 1);
  const auto skew = finite_support_oracle({{q("3/4"), q("2/3")}, {q("1/4"), q("1/3")}});
  CHECK(skew->query(0, q("1/2"), q("1/2")) == q("1/3"));
  CHECK_THROWS_AS(finite_support_oracle({{1, q("1/2")}}), ValidationError);
  CHECK_THROWS_AS(finite_support_oracle({{q("3/2"), 1}}), ValidationError);
}

TEST_CASE("piecewise constant oracle") {
  const auto flat = piecewise_constant_oracle(vec({"0", "1"}), vec({"1"}));
  const auto u = uniform_oracle();
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    Rational a = rng.unit_rational() * 2 - 1;
    Rational b = rng.unit_rational() * 2 - 1;
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    REQUIRE(flat->query(a, b, q("1/2")) == u->query(a, b, q("1/2")));
  }
  const auto front = piecewise_constant_oracle(vec({"0", "1/2", "1"}), vec({"2", "0"}));
  CHECK(front->query(0, q("1/4"), q("1/2")) == q("1/2"));
  CHECK(front->query(q("1/2"), 1, q("1/2")) == 0);
  CHECK(front->query(-1, 1, q("1/2")) == 1);
  CHECK_THROWS_AS(piecewise_constant_oracle(vec({"0", "1"}), vec({"2"})),
                  ValidationError);
  CHECK_THROWS_AS(piecewise_constant_oracle(vec({"0", "1/2"}), vec({"2"})),
                  ValidationError);
}

TEST_CASE("built-in oracles are non-negative and additive") {
  const std::vector<OraclePtr> oracles = {
      uniform_oracle(),
      finite_support_oracle({{0, q("1/5")}, {q("1/3"), q("2/5")}, {1, q("2/5")}}),
      piecewise_constant_oracle(vec({"0", "1/3", "1"}), vec({"3/2", "3/4"}))};
  Rng rng(13);
  for (const auto& o : oracles) {
    CHECK(o->query(-1, 1, q("1/7")) == 1);
    for (int t = 0; t < 200; ++t) {
      std::vector<Rational> cuts;
      for (int s = 0; s < 3; ++s) cuts.push_back(rng.unit_rational(30) * 2 - 1);
      std::sort(cuts.begin(), cuts.end());
      if (cuts[0] == cuts[1] || cuts[1] == cuts[2]) continue;
      const Rational d = rng.unit_rational() / 2 + q("1/100");
      const Rational left = o->query(cuts[0], cuts[1], d);
      REQUIRE(left >= 0);
      REQUIRE(o->query(cuts[0], cuts[2], d) == left + o->query(cuts[1], cuts[2], d));
    }
  }
}

TEST_CASE("continuous instance") {
  ContinuousInstance inst({uniform_oracle(), uniform_oracle()}, vec({"1", "1"}), 3,
                          q("1/2"));
  CHECK(inst.n() == 2);
  CHECK(inst.all_exact());
  CHECK(inst.coordinate_mass(0)(kNegInf, q("1/4")) == q("1/4"));
  CHECK(inst.coordinate_mass(0)(q("3/4"), kPosInf) == q("1/4"));
  CHECK(inst.coordinate_mass(0)(q("3/4"), q("1/4")) == 0);
  CHECK_THROWS_AS(ContinuousInstance({uniform_oracle()}, vec({"1"}), 1, 1),
                  ValidationError);
  CHECK_THROWS_AS(ContinuousInstance({uniform_oracle()}, vec({"1", "1"}), 1, q("1/2")),
                  ValidationError);
}

TEST_CASE("cover validation") {
  CHECK_NOTHROW(validate_cover(Cover{{Point{0, 1}}}, 2));
  CHECK_THROWS_AS(validate_cover(Cover{{Point{0, 1}}}, 3), ValidationError);
  CHECK_THROWS_AS(validate_cover(Cover{{Point{0, q("3/2")}}}, 2), ValidationError);
  CHECK_THROWS_AS(validate_cover(Cover{}, 2), ValidationError);
}
