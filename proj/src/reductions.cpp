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

#include "pareto_cover/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pareto_cover/config.hpp"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/evaluator.hpp"
#include "pareto_cover/numerics.hpp"
#include "pareto_cover/oracle.hpp"

namespace pareto_cover {

namespace {

constexpr std::uint64_t kMaxSeparationCovers = 20'000'000;

std::int64_t checked_sum(const std::vector<std::int64_t>& a) {
  if (a.empty()) throw ValidationError("need at least one number");
  std::int64_t s = 0;
  for (auto v : a) {
    if (v < 1) throw ValidationError("numbers must be positive integers");
    if (v > (std::int64_t{1} << 40) || s > (std::int64_t{1} << 50)) {
      throw ValidationError("numbers too large");
    }
    s += v;
  }
  return s;
}

std::int64_t even_sum(const std::vector<std::int64_t>& a) {
  const std::int64_t s = checked_sum(a);
  if (s % 2 != 0) throw ValidationError("the numbers must have an even sum, got " + std::to_string(s));
  return s;
}

Rational rat(std::int64_t v) { return Rational(Integer(std::to_string(v))); }

std::vector<Rational> rats(const std::vector<std::int64_t>& a) {
  std::vector<Rational> out;
  for (auto v : a) out.push_back(rat(v));
  return out;
}

struct K2Parameters {
  Rational alpha;
  Rational beta;
};

K2Parameters k2_parameters(const std::vector<std::int64_t>& a) {
  const Rational alpha = Rational(2) / rat(even_sum(a));
  Rational beta = alpha * alpha / (48 * static_cast<long>(a.size() + 1));
  beta.canonicalize();
  return {alpha, beta};
}

// e^{-x} lies in [y / (1 + 2^-bits), y / (1 - 2^-bits)] for y = approx_exp_neg(x, bits).
std::pair<Rational, Rational> exp_neg_bracket(const Rational& x, int bits) {
  const Rational y = approx_exp_neg(x, bits);
  const Rational eta = pow_rational(Rational(2), -bits);
  return {y / (1 + eta), y / (1 - eta)};
}

}  // namespace

void validate_graph(const Graph& g) {
  if (g.n < 2) throw ValidationError("graph needs at least two nodes");
  if (g.n > 24) throw ValidationError("graph has more than 24 nodes");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside the node range");
    }
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
  }
}

int partition_k2_precision(const std::vector<std::int64_t>& a) {
  const K2Parameters k = k2_parameters(a);
  return static_cast<int>(ceil_log(Rational(2), Rational(1 / k.beta)));
}

ThresholdInstance partition_to_k2(const std::vector<std::int64_t>& a) {
  const K2Parameters k = k2_parameters(a);
  const int m = partition_k2_precision(a);
  const int n = static_cast<int>(a.size());
  std::vector<Rational> p;
  for (auto v : a) p.push_back(1 - approx_exp_neg(k.alpha * rat(v), m));
  const Rational gamma0 = approx_exp_neg(Rational(1), m);
  const Rational gamma1 = pow_rational(1 - k.beta, n + 1) / k.alpha * gamma0;
  const Rational sum = rat(checked_sum(a));
  const std::vector<Rational> c = rats(a);
  ThresholdInstance out{bernoulli_instance(p, c, 2), Rational(sum - gamma1)};
  if (!partition_k2_bounds_hold(a, out, m + 8)) {
    throw ContractError("k = 2 construction failed its rounding check");
  }
  return out;
}

bool partition_k2_bounds_hold(const std::vector<std::int64_t>& a, const ThresholdInstance& t,
                              int bits) {
  const K2Parameters k = k2_parameters(a);
  const int n = static_cast<int>(a.size());
  if (t.instance.n() != n || t.instance.grid_size() != 2) return false;
  for (int i = 0; i < n; ++i) {
    const auto [lo, hi] = exp_neg_bracket(k.alpha * rat(a[static_cast<std::size_t>(i)]), bits);
    const Rational& q = t.instance.probs()[static_cast<std::size_t>(i)][0];
    if (q < (1 - k.beta) * hi || q > (1 + k.beta) * lo) return false;
  }
  const auto [lo, hi] = exp_neg_bracket(Rational(1), bits);
  const Rational gap = rat(checked_sum(a)) - t.gamma;
  return pow_rational(1 - k.beta, n + 2) / k.alpha * hi <= gap &&
         gap <= pow_rational(1 - k.beta, n) / k.alpha * lo;
}

ThresholdInstance partition_to_k3(const std::vector<std::int64_t>& a) {
  const Rational s = rat(even_sum(a));
  const Rational big = 2 * s * s;
  std::vector<Rational> p;
  Rational none = 1;
  for (auto v : a) {
    Rational pi = rat(v) / (s * big);
    pi.canonicalize();
    none *= 1 - pi;
    p.push_back(pi);
  }
  Rational gamma = (1 - none) * s + s / (big * big) - s * s / (4 * s * big);
  gamma.canonicalize();
  return {bernoulli_instance(p, rats(a), 3), gamma};
}

ThresholdInstance numpart_to_k(int t, const std::vector<std::int64_t>& a) {
  if (t < 2) throw ValidationError("number of parts must be at least 2");
  const std::int64_t total = checked_sum(a);
  if (total % t != 0) {
    throw ValidationError("sum " + std::to_string(total) + " is not divisible by " +
                          std::to_string(t));
  }
  const Rational s = rat(total);
  const Rational big = 13 * s * s;
  const Rational big4 = pow_rational(big, 4);
  std::vector<Rational> p;
  std::vector<Rational> c = rats(a);
  for (auto v : a) p.push_back(rat(v) / big4);
  p.push_back(pow_rational(big, -6));
  c.push_back(2 * big);
  for (auto& v : p) v.canonicalize();
  Rational gamma = s * s / (t * big4) + 6 / pow_rational(big, 5);
  gamma.canonicalize();
  return {bernoulli_instance(p, c, t + 2), gamma};
}

std::pair<DiscreteProductInstance, Cover> graph_to_cover_gadget(const Graph& g) {
  validate_graph(g);
  const std::vector<Rational> p(static_cast<std::size_t>(g.n), Rational(1, 2));
  const std::vector<Rational> c(static_cast<std::size_t>(g.n), Rational(1));
  Cover cover;
  for (const auto& [u, v] : g.edges) {
    Point b(static_cast<std::size_t>(g.n), Rational(1));
    b[static_cast<std::size_t>(u)] = 0;
    b[static_cast<std::size_t>(v)] = 0;
    cover.points.push_back(std::move(b));
  }
  cover.points.emplace_back(static_cast<std::size_t>(g.n), Rational(1));
  const int k = static_cast<int>(cover.points.size());
  return {bernoulli_instance(p, c, k), std::move(cover)};
}

Integer count_vertex_covers_via_cost(const Graph& g) {
  const auto [instance, cover] = graph_to_cover_gadget(g);
  const Rational cost = cover.size() <= max_cover_size() ? expected_cost(instance, cover)
                                                         : expected_cost_naive(instance, cover);
  Rational count = (cost - (g.n - 2)) * pow_rational(Rational(2), g.n - 1);
  count.canonicalize();
  if (count.get_den() != 1) {
    throw ContractError("vertex-cover count " + format_rational(count) + " is not an integer");
  }
  return count.get_num();
}

bool partition_is_yes(const std::vector<std::int64_t>& a) {
  const std::int64_t total = checked_sum(a);
  if (total % 2 != 0) return false;
  const auto half = static_cast<std::size_t>(total / 2);
  if (half > 50'000'000) throw ResourceError("partition target too large");
  std::vector<char> reach(half + 1, 0);
  reach[0] = 1;
  for (auto v : a) {
    const auto w = static_cast<std::size_t>(v);
    for (std::size_t s = half; s >= w && s > 0; --s) {
      if (reach[s - w]) reach[s] = 1;
    }
  }
  return reach[half] != 0;
}

bool numpart_is_yes(int t, const std::vector<std::int64_t>& a) {
  if (t < 1) throw ValidationError("number of parts must be positive");
  const std::int64_t total = checked_sum(a);
  if (total % t != 0) return false;
  if (a.size() > 30) throw ResourceError("number partitioning search allows 30 numbers");
  const std::int64_t target = total / t;
  std::vector<std::int64_t> items = a;
  std::sort(items.rbegin(), items.rend());
  if (items.front() > target) return false;
  std::vector<std::int64_t> load(static_cast<std::size_t>(t), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == items.size()) return true;
    for (int j = 0; j < t; ++j) {
      auto& l = load[static_cast<std::size_t>(j)];
      if (l + items[idx] > target) continue;
      // Empty parts are interchangeable.
      if (l == 0 && j > 0 && load[static_cast<std::size_t>(j - 1)] == 0) break;
      l += items[idx];
      if (place(idx + 1)) return true;
      l -= items[idx];
    }
    return false;
  };
  return place(0);
}

SeparationCheck check_separation(const ThresholdInstance& t, CoverFamily family) {
  const DiscreteProductInstance& inst = t.instance;
  const BinaryCoverScorer scorer(inst);
  const int n = inst.n();
  const std::uint32_t full = (1u << n) - 1;
  for (int i = 0; i < n; ++i) {
    if (inst.top_index(i) != 1) throw ValidationError("separation check needs a^* = 1");
  }
  const int k = inst.k();
  std::vector<std::uint32_t> fixed;
  int free = 0;
  switch (family) {
    case CoverFamily::kTopPlusOne:
      if (k != 2) throw ValidationError("family {b,1} needs k = 2");
      fixed = {full};
      free = 1;
      break;
    case CoverFamily::kZeroTopPlusOne:
      if (k != 3) throw ValidationError("family {0,b,1} needs k = 3");
      fixed = {0, full};
      free = 1;
      break;
    case CoverFamily::kZeroTopPlusAny:
      if (k < 2) throw ValidationError("family {0,...,1} needs k >= 2");
      fixed = {0, full};
      free = k - 2;
      break;
    case CoverFamily::kExhaustive:
      fixed = {full};
      free = k - 1;
      break;
  }
  const std::uint64_t points = std::uint64_t{1} << n;
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(points + free - 1),
               static_cast<unsigned long>(free));
  if (count > Integer(static_cast<unsigned long>(kMaxSeparationCovers))) {
    throw ResourceError("separation check would score " + count.get_str() + " covers");
  }

  struct Best {
    bool found = false;
    Integer score;
    std::vector<std::uint32_t> cover;
    std::uint64_t covers = 0;
  };
  // Multisets of free points in lexicographic order, split by first element.
  auto scan = [&](std::uint32_t first, Best& best) {
    std::vector<std::uint32_t> cover = fixed;
    cover.resize(fixed.size() + static_cast<std::size_t>(free));
    std::function<void(int, std::uint32_t)> rec = [&](int depth, std::uint32_t from) {
      if (depth == free) {
        const auto s = scorer.scaled_cost(cover);
        ++best.covers;
        if (s && (!best.found || *s < best.score)) {
          best.found = true;
          best.score = *s;
          best.cover = cover;
        }
        return;
      }
      for (std::uint64_t b = from; b < points; ++b) {
        cover[fixed.size() + static_cast<std::size_t>(depth)] = static_cast<std::uint32_t>(b);
        rec(depth + 1, static_cast<std::uint32_t>(b));
      }
    };
    if (free == 0) {
      rec(0, 0);
    } else {
      cover[fixed.size()] = first;
      rec(1, first);
    }
  };

  const std::int64_t rows = free == 0 ? 1 : static_cast<std::int64_t>(points);
  std::vector<Best> bests(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < rows; ++r) {
    scan(static_cast<std::uint32_t>(r), bests[static_cast<std::size_t>(r)]);
  }
  Best* winner = nullptr;
  std::uint64_t covers = 0;
  for (auto& b : bests) {
    covers += b.covers;
    if (b.found && (winner == nullptr || b.score < winner->score)) winner = &b;
  }
  if (winner == nullptr) throw ContractError("no feasible cover in the family");
  SeparationCheck out;
  out.min_cost = Rational(winner->score, scorer.denominator());
  out.min_cost.canonicalize();
  out.best = scorer.to_cover(winner->cover);
  out.covers = covers;
  out.below_gamma = out.min_cost <= t.gamma;
  return out;
}

}  // namespace pareto_cover
