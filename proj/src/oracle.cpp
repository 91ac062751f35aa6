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

#include "pareto_cover/oracle.hpp"

#include <algorithm>

#include "pareto_cover/config.hpp"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/evaluator.hpp"

namespace pareto_cover {

namespace {

// All non-decreasing index tuples of length len over [0, count), in
// lexicographic order.
std::vector<std::vector<std::uint32_t>> multisets(std::uint32_t count, int len) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(cur);
    int t = len - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] + 1 == count) --t;
    if (t < 0) break;
    const std::uint32_t v = cur[static_cast<std::size_t>(t)] + 1;
    for (int s = t; s < len; ++s) cur[static_cast<std::size_t>(s)] = v;
  }
  return out;
}

}  // namespace

std::vector<Point> grid_points(const DiscreteProductInstance& instance) {
  const int n = instance.n();
  const int g = instance.grid_size();
  std::vector<Point> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Point p;
    p.reserve(idx.size());
    for (int v : idx) p.push_back(instance.grid()[static_cast<std::size_t>(v)]);
    out.push_back(std::move(p));
    int t = n - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == g - 1) idx[static_cast<std::size_t>(t--)] = 0;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
  }
  return out;
}

BruteForceResult brute_force_optimum(const DiscreteProductInstance& instance,
                                     const BruteForceOptions& options) {
  const int k = instance.k();
  if (k > options.max_k) {
    throw ResourceError("brute force allows k <= " + std::to_string(options.max_k) +
                        ", got " + std::to_string(k));
  }
  Integer total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(instance.grid_size()),
                static_cast<unsigned long>(instance.n()));
  if (total > Integer(static_cast<unsigned long>(options.max_grid_points))) {
    throw ResourceError("brute force allows " + std::to_string(options.max_grid_points) +
                        " grid points, instance has " + total.get_str());
  }
  const std::vector<Point> points = grid_points(instance);
  const auto picks = multisets(static_cast<std::uint32_t>(points.size()), k - 1);
  const Point top = instance.a_star();

  auto build = [&](const std::vector<std::uint32_t>& pick) {
    Cover cover;
    for (auto s : pick) cover.points.push_back(points[s]);
    cover.points.push_back(top);
    return cover;
  };

  std::vector<Rational> costs(picks.size());
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(picks.size()); ++t) {
      costs[static_cast<std::size_t>(t)] =
          expected_cost(instance, build(picks[static_cast<std::size_t>(t)]));
    }
  } else {
    for (std::size_t t = 0; t < picks.size(); ++t) costs[t] = expected_cost(instance, build(picks[t]));
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < costs.size(); ++t) {
    if (costs[t] < costs[best]) best = t;
  }
  return {build(picks[best]), costs[best], picks.size()};
}

std::int64_t lattice_score(std::int64_t lattice, std::int64_t c1, std::int64_t c2,
                           const std::int64_t p[2], const std::int64_t q[2]) {
  std::int64_t cp = c1 * p[0] + c2 * p[1];
  std::int64_t cq = c1 * q[0] + c2 * q[1];
  std::int64_t ap = p[0] * p[1];
  std::int64_t aq = q[0] * q[1];
  if (cq < cp) {
    std::swap(cp, cq);
    std::swap(ap, aq);
  }
  const std::int64_t both = std::min(p[0], q[0]) * std::min(p[1], q[1]);
  const std::int64_t top = (c1 + c2) * lattice;
  return cp * ap + cq * (aq - both) + top * (lattice * lattice - ap - aq + both);
}

Rational LatticeSearchResult::cost(std::int64_t lattice) const {
  Rational out(Integer(std::to_string(score)), Integer(lattice) * lattice * lattice);
  out.canonicalize();
  return out;
}

Cover LatticeSearchResult::cover(std::int64_t lattice) const {
  auto coord = [&](std::int64_t v) {
    Rational r(Integer(std::to_string(v)), Integer(std::to_string(lattice)));
    r.canonicalize();
    return r;
  };
  return Cover{{{coord(p[0]), coord(p[1])}, {coord(q[0]), coord(q[1])}, {1, 1}}};
}

LatticeSearchResult lattice_search_uniform2(std::int64_t lattice, std::int64_t c1,
                                            std::int64_t c2, bool parallel) {
  if (lattice < 1 || lattice > 2000) throw ValidationError("lattice size must lie in [1, 2000]");
  if (c1 < 0 || c2 < 0 || c1 > 1000 || c2 > 1000) {
    throw ValidationError("lattice costs must lie in [0, 1000]");
  }
  const std::int64_t side = lattice + 1;
  const std::int64_t count = side * side;

  // Best over q >= p for a fixed p; rows are independent.
  auto scan_row = [&](std::int64_t pi, LatticeSearchResult& best) {
    const std::int64_t p[2] = {pi / side, pi % side};
    for (std::int64_t qi = pi; qi < count; ++qi) {
      const std::int64_t q[2] = {qi / side, qi % side};
      const std::int64_t s = lattice_score(lattice, c1, c2, p, q);
      if (best.pairs == 0 || s < best.score) {
        best.score = s;
        best.p[0] = p[0];
        best.p[1] = p[1];
        best.q[0] = q[0];
        best.q[1] = q[1];
      }
      ++best.pairs;
    }
  };

  std::vector<LatticeSearchResult> rows(static_cast<std::size_t>(count));
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t pi = 0; pi < count; ++pi) scan_row(pi, rows[static_cast<std::size_t>(pi)]);
  } else {
    for (std::int64_t pi = 0; pi < count; ++pi) scan_row(pi, rows[static_cast<std::size_t>(pi)]);
  }
  LatticeSearchResult out = rows.front();
  std::uint64_t pairs = 0;
  for (const auto& r : rows) {
    pairs += r.pairs;
    if (r.score < out.score) out = r;
  }
  out.pairs = pairs;
  return out;
}

BinaryCoverScorer::BinaryCoverScorer(const DiscreteProductInstance& instance)
    : n_(instance.n()) {
  if (instance.grid_size() != 2) throw ValidationError("binary scorer needs the grid {0,1}");
  if (n_ > 24) throw ResourceError("binary scorer allows n <= 24");
  Integer cost_den = 1;
  for (const auto& c : instance.costs()) {
    mpz_lcm(cost_den.get_mpz_t(), cost_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  for (const auto& c : instance.costs()) costs_.push_back(Rational(c * cost_den).get_num());

  // Atom masses, then scaled to integers over their common denominator.
  std::vector<Rational> mass{Rational(1)};
  for (int i = 0; i < n_; ++i) {
    const auto& row = instance.probs()[static_cast<std::size_t>(i)];
    std::vector<Rational> next(mass.size() * 2);
    for (std::size_t x = 0; x < mass.size(); ++x) {
      next[x] = mass[x] * row[0];
      next[x | (std::size_t{1} << i)] = mass[x] * row[1];
    }
    mass = std::move(next);
  }
  Integer lcm = 1;
  for (const auto& m : mass) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.get_den().get_mpz_t());
  weight_denominator_ = lcm;
  denominator_ = weight_denominator_ * cost_den;
  for (std::size_t x = 0; x < mass.size(); ++x) {
    if (mass[x] == 0) continue;
    atoms_.push_back(static_cast<std::uint32_t>(x));
    weights_.push_back(Rational(mass[x] * lcm).get_num());
  }
}

std::optional<Integer> BinaryCoverScorer::scaled_cost(
    std::span<const std::uint32_t> points) const {
  std::vector<Integer> point_cost(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int i = 0; i < n_; ++i) {
      if (points[j] >> i & 1u) point_cost[j] += costs_[static_cast<std::size_t>(i)];
    }
  }
  Integer total = 0;
  for (std::size_t t = 0; t < atoms_.size(); ++t) {
    const Integer* best = nullptr;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if ((atoms_[t] & ~points[j]) != 0) continue;
      if (best == nullptr || point_cost[j] < *best) best = &point_cost[j];
    }
    if (best == nullptr) return std::nullopt;
    mpz_addmul(total.get_mpz_t(), weights_[t].get_mpz_t(), best->get_mpz_t());
  }
  return total;
}

Rational BinaryCoverScorer::cost(std::span<const std::uint32_t> points) const {
  const auto scaled = scaled_cost(points);
  if (!scaled) {
    Integer missing = 0;
    for (std::size_t t = 0; t < atoms_.size(); ++t) {
      bool covered = false;
      for (auto b : points) covered = covered || (atoms_[t] & ~b) == 0;
      if (!covered) missing += weights_[t];
    }
    Rational lost(missing, weight_denominator_);
    lost.canonicalize();
    throw InfeasibleCoverError(lost);
  }
  Rational out(*scaled, denominator_);
  out.canonicalize();
  return out;
}

Cover BinaryCoverScorer::to_cover(std::span<const std::uint32_t> points) const {
  Cover cover;
  for (auto b : points) {
    Point p;
    for (int i = 0; i < n_; ++i) p.emplace_back(static_cast<int>(b >> i & 1u));
    cover.points.push_back(std::move(p));
  }
  return cover;
}

}  // namespace pareto_cover
