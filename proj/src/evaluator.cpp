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

#include "pareto_cover/evaluator.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pareto_cover/config.hpp"
#include "pareto_cover/errors.hpp"

namespace pareto_cover {

namespace {

ExtendedRational max_over(std::span<const Rational> b, unsigned set) {
  if (set == 0) return ExtendedRational::neg_inf();
  const Rational* best = nullptr;
  for (unsigned j = 0; j < b.size(); ++j) {
    if ((set >> j & 1u) && (best == nullptr || b[j] > *best)) best = &b[j];
  }
  return *best;
}

ExtendedRational min_over(std::span<const Rational> b, unsigned set) {
  if (set == 0) return ExtendedRational::pos_inf();
  const Rational* best = nullptr;
  for (unsigned j = 0; j < b.size(); ++j) {
    if ((set >> j & 1u) && (best == nullptr || b[j] < *best)) best = &b[j];
  }
  return *best;
}

std::vector<Rational> column(const Cover& cover, int i) {
  std::vector<Rational> out;
  out.reserve(cover.points.size());
  for (const auto& p : cover.points) out.push_back(p[static_cast<std::size_t>(i)]);
  return out;
}

void check_cover_size(const Cover& cover) {
  require_cover_size(cover.size(), "evaluator");
}

template <typename MassFor>
JSetDistribution run_stages(int n, const Cover& cover, MassFor&& mass_for) {
  JSetDistribution dist = j_stage_init(column(cover, 0), mass_for(0));
  for (int i = 1; i < n; ++i) {
    dist = j_stage_step(dist, column(cover, i), mass_for(i));
  }
  return dist;
}

Rational cost_from_distribution(const JSetDistribution& dist,
                                const std::vector<Rational>& pc) {
  if (dist.masses[0] != 0) throw InfeasibleCoverError(dist.masses[0]);
  Rational total = 0;
  for (unsigned set = 1; set < dist.masses.size(); ++set) {
    if (dist.masses[set] == 0) continue;
    const Rational* best = nullptr;
    for (unsigned j = 0; j < pc.size(); ++j) {
      if ((set >> j & 1u) && (best == nullptr || pc[j] < *best)) best = &pc[j];
    }
    total += dist.masses[set] * *best;
  }
  return total;
}

}  // namespace

int JSetDistribution::k() const {
  return std::countr_zero(static_cast<unsigned>(masses.size()));
}

Rational JSetDistribution::total() const {
  Rational out = 0;
  for (const auto& m : masses) out += m;
  return out;
}

JSetDistribution j_stage_init(std::span<const Rational> b_firsts,
                              const IntervalMassFn& mass) {
  const unsigned full = (1u << b_firsts.size()) - 1;
  JSetDistribution out;
  out.stage = 1;
  out.masses.resize(full + 1);
  for (unsigned set = 0; set <= full; ++set) {
    out.masses[set] = mass(max_over(b_firsts, full & ~set), min_over(b_firsts, set));
  }
  return out;
}

JSetDistribution j_stage_step(const JSetDistribution& prev,
                              std::span<const Rational> b_iths,
                              const IntervalMassFn& mass) {
  const unsigned full = (1u << b_iths.size()) - 1;
  if (prev.masses.size() != full + 1) {
    throw ContractError("stage distribution and cover size disagree");
  }
  JSetDistribution out;
  out.stage = prev.stage + 1;
  out.masses.assign(full + 1, Rational(0));
  for (unsigned set = 0; set <= full; ++set) {
    const ExtendedRational hi = min_over(b_iths, set);
    // Walk the supersets L of J as J | s for s ranging over subsets of ~J.
    const unsigned rest = full & ~set;
    for (unsigned s = rest;; s = (s - 1) & rest) {
      const Rational& p = prev.masses[set | s];
      if (p != 0) {
        const Rational m = mass(max_over(b_iths, s), hi);
        if (m != 0) out.masses[set] += p * m;
      }
      if (s == 0) break;
    }
  }
  return out;
}

std::vector<Rational> point_costs(std::span<const Rational> costs,
                                  const Cover& cover) {
  std::vector<Rational> out;
  out.reserve(cover.points.size());
  for (const auto& point : cover.points) {
    Rational sum = 0;
    for (std::size_t i = 0; i < costs.size(); ++i) sum += costs[i] * point[i];
    out.push_back(std::move(sum));
  }
  return out;
}

JSetDistribution final_distribution(const DiscreteProductInstance& instance,
                                    const Cover& cover) {
  validate_cover(cover, instance.n());
  check_cover_size(cover);
  return run_stages(instance.n(), cover,
                    [&](int i) { return instance.coordinate_mass(i); });
}

JSetDistribution final_distribution(const ContinuousInstance& instance,
                                    const Cover& cover) {
  validate_cover(cover, instance.n());
  check_cover_size(cover);
  return run_stages(instance.n(), cover,
                    [&](int i) { return instance.coordinate_mass(i); });
}

bool is_pareto_cover(const DiscreteProductInstance& instance, const Cover& cover) {
  validate_cover(cover, instance.n());
  const Point top = instance.a_star();
  return std::any_of(cover.points.begin(), cover.points.end(), [&](const Point& b) {
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (b[i] < top[i]) return false;
    }
    return true;
  });
}

Rational uncovered_mass(const DiscreteProductInstance& instance,
                        const Cover& cover) {
  return final_distribution(instance, cover).masses[0];
}

Rational expected_cost(const DiscreteProductInstance& instance,
                       const Cover& cover) {
  return cost_from_distribution(final_distribution(instance, cover),
                                point_costs(instance.costs(), cover));
}

Rational expected_cost(const ContinuousInstance& instance, const Cover& cover) {
  if (!instance.all_exact()) {
    throw ContractError("expected_cost needs exact oracles; discretize first");
  }
  return cost_from_distribution(final_distribution(instance, cover),
                                point_costs(instance.costs(), cover));
}

BatchResult expected_costs(const DiscreteProductInstance& instance,
                           std::span<const Cover> covers) {
  for (const auto& cover : covers) {
    validate_cover(cover, instance.n());
    check_cover_size(cover);
  }
  BatchResult out;
  const auto count = static_cast<std::int64_t>(covers.size());
  out.costs.resize(covers.size());
  std::vector<char> ok(covers.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < count; ++t) {
    try {
      out.costs[static_cast<std::size_t>(t)] =
          expected_cost(instance, covers[static_cast<std::size_t>(t)]);
      ok[static_cast<std::size_t>(t)] = 1;
    } catch (const InfeasibleCoverError&) {
      ok[static_cast<std::size_t>(t)] = 0;
    }
  }
  out.feasible.assign(ok.begin(), ok.end());
  return out;
}

Rational expected_cost_naive(const DiscreteProductInstance& instance,
                             const Cover& cover, std::uint64_t cap) {
  validate_cover(cover, instance.n());
  const int n = instance.n();
  const auto g = static_cast<std::uint64_t>(instance.grid_size());
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / g) {
      throw ResourceError("naive evaluation over more than " +
                          std::to_string(cap) + " sample points");
    }
    total *= g;
  }
  const std::vector<Rational> pc = point_costs(instance.costs(), cover);
  const auto& grid = instance.grid();
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  Rational sum = 0;
  Rational uncovered = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Rational w = 1;
    for (int i = 0; i < n && w != 0; ++i) {
      w *= instance.probs()[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
    }
    if (w != 0) {
      const Rational* best = nullptr;
      for (std::size_t j = 0; j < cover.points.size(); ++j) {
        bool dominates = true;
        for (int i = 0; i < n && dominates; ++i) {
          dominates = grid[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])] <=
                      cover.points[j][static_cast<std::size_t>(i)];
        }
        if (dominates && (best == nullptr || pc[j] < *best)) best = &pc[j];
      }
      if (best == nullptr) {
        uncovered += w;
      } else {
        sum += w * *best;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (++digit[static_cast<std::size_t>(i)] < static_cast<int>(g)) break;
      digit[static_cast<std::size_t>(i)] = 0;
    }
  }
  if (uncovered != 0) throw InfeasibleCoverError(uncovered);
  return sum;
}

Rational cost_lower_bound(const DiscreteProductInstance& instance) {
  Rational out = 0;
  for (int i = 0; i < instance.n(); ++i) {
    out += instance.costs()[static_cast<std::size_t>(i)] * instance.mean(i);
  }
  return out;
}

Rational cost_lower_bound(const ContinuousInstance& instance) {
  Rational sum = 0;
  for (const auto& c : instance.costs()) sum += c;
  return instance.alpha() * sum;
}

Cover snap_cover_down(const DiscreteProductInstance& instance, const Cover& cover) {
  validate_cover(cover, instance.n());
  Cover out = cover;
  for (auto& point : out.points) {
    for (auto& v : point) {
      v = instance.grid()[static_cast<std::size_t>(instance.floor_index(v))];
    }
  }
  return out;
}

mpf_class expected_cost_float(const DiscreteProductInstance& instance,
                              const Cover& cover, unsigned precision_bits) {
  validate_cover(cover, instance.n());
  check_cover_size(cover);
  const int n = instance.n();
  const unsigned full = (1u << cover.points.size()) - 1;
  const auto to_f = [&](const Rational& q) { return mpf_class(q, precision_bits); };

  // Interval masses come from grid-index prefix sums in floating arithmetic.
  std::vector<std::vector<mpf_class>> prefix(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& row = prefix[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(instance.grid_size()) + 1,
               mpf_class(0, precision_bits));
    for (int l = 0; l < instance.grid_size(); ++l) {
      row[static_cast<std::size_t>(l) + 1] =
          row[static_cast<std::size_t>(l)] +
          to_f(instance.probs()[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]);
    }
  }
  // Grid index of each cover coordinate, -1 for "no constraint from below".
  auto index_of = [&](const Rational& v) { return instance.floor_index(v); };
  auto mass = [&](int i, int lo, int hi) {
    const auto& row = prefix[static_cast<std::size_t>(i)];
    if (lo >= hi) return mpf_class(0, precision_bits);
    return mpf_class(row[static_cast<std::size_t>(hi) + 1] -
                         row[static_cast<std::size_t>(lo) + 1],
                     precision_bits);
  };
  auto bounds = [&](int i, unsigned below, unsigned set) {
    int lo = -1;
    int hi = instance.grid_size() - 1;
    for (unsigned j = 0; j <= 31 && (1u << j) <= full; ++j) {
      const int idx = index_of(cover.points[j][static_cast<std::size_t>(i)]);
      if (below >> j & 1u) lo = std::max(lo, idx);
      if (set >> j & 1u) hi = std::min(hi, idx);
    }
    return std::pair{lo, hi};
  };

  std::vector<mpf_class> cur(full + 1, mpf_class(0, precision_bits));
  for (unsigned set = 0; set <= full; ++set) {
    const auto [lo, hi] = bounds(0, full & ~set, set);
    cur[set] = mass(0, lo, hi);
  }
  for (int i = 1; i < n; ++i) {
    std::vector<mpf_class> next(full + 1, mpf_class(0, precision_bits));
    for (unsigned set = 0; set <= full; ++set) {
      const unsigned rest = full & ~set;
      for (unsigned s = rest;; s = (s - 1) & rest) {
        const auto [lo, hi] = bounds(i, s, set);
        next[set] += cur[set | s] * mass(i, lo, hi);
        if (s == 0) break;
      }
    }
    cur = std::move(next);
  }
  const std::vector<Rational> pc = point_costs(instance.costs(), cover);
  mpf_class total(0, precision_bits);
  for (unsigned set = 1; set <= full; ++set) {
    const Rational* best = nullptr;
    for (unsigned j = 0; j < pc.size(); ++j) {
      if ((set >> j & 1u) && (best == nullptr || pc[j] < *best)) best = &pc[j];
    }
    total += cur[set] * to_f(*best);
  }
  return total;
}

}  // namespace pareto_cover
