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

// Shared helpers for the unit tests: literal parsing and seeded random
// instance generators.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pareto_cover/measures.hpp"
#include "pareto_cover/rational.hpp"

namespace pareto_cover::testing {

inline Rational q(const char* text) { return parse_rational(text); }

// num/den in canonical form; mpq_class(num, den) alone does not reduce.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Point pt(std::initializer_list<const char*> coords) {
  Point p;
  for (const char* c : coords) p.push_back(parse_rational(c));
  return p;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  // Random rational in [0,1] with denominator at most max_den.
  Rational unit_rational(int max_den = 12) {
    const int den = uniform_int(1, max_den);
    return frac(uniform_int(0, den), den);
  }

  // Random rational in [lo_num/den, 1] style ranges are built by callers.
  Rational positive_rational(int max_num = 9, int max_den = 7) {
    return frac(uniform_int(1, max_num), uniform_int(1, max_den));
  }

  // Probability vector of the given length; roughly a third of the entries
  // are zero, never all.
  std::vector<Rational> probability_vector(int len) {
    std::vector<int> w(static_cast<std::size_t>(len));
    int total = 0;
    for (auto& x : w) {
      x = coin(0.33) ? 0 : uniform_int(1, 9);
      total += x;
    }
    if (total == 0) {
      w[static_cast<std::size_t>(uniform_int(0, len - 1))] = 1;
      total = 1;
    }
    std::vector<Rational> out;
    out.reserve(w.size());
    for (int x : w) out.emplace_back(x, total);
    for (auto& r : out) r.canonicalize();
    return out;
  }

  // Strictly increasing grid 0 = a_0 < ... < a_{M+1} = 1.
  std::vector<Rational> grid(int interior) {
    std::vector<Rational> inner;
    while (static_cast<int>(inner.size()) < interior) {
      const int den = uniform_int(2, 16);
      const Rational v = frac(uniform_int(1, den - 1), den);
      if (std::find(inner.begin(), inner.end(), v) == inner.end()) inner.push_back(v);
    }
    std::sort(inner.begin(), inner.end());
    std::vector<Rational> out{Rational(0)};
    out.insert(out.end(), inner.begin(), inner.end());
    out.emplace_back(1);
    return out;
  }

  DiscreteProductInstance discrete_instance(int n, int interior, int k) {
    auto g = grid(interior);
    std::vector<std::vector<Rational>> probs;
    std::vector<Rational> costs;
    for (int i = 0; i < n; ++i) {
      probs.push_back(probability_vector(interior + 2));
      costs.push_back(coin(0.1) ? Rational(0) : positive_rational());
    }
    return DiscreteProductInstance(std::move(g), std::move(probs), std::move(costs), k);
  }

  // Cover of k points drawn from the grid; when feasible is set, the last
  // point is replaced by a^*.
  Cover grid_cover(const DiscreteProductInstance& inst, int k, bool feasible) {
    Cover cover;
    for (int j = 0; j < k; ++j) {
      Point p;
      for (int i = 0; i < inst.n(); ++i) {
        p.push_back(inst.grid()[static_cast<std::size_t>(
            uniform_int(0, inst.grid_size() - 1))]);
      }
      cover.points.push_back(std::move(p));
    }
    if (feasible) cover.points.back() = inst.a_star();
    return cover;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pareto_cover::testing
