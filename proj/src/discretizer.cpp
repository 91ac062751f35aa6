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

#include "pareto_cover/discretizer.hpp"

#include <algorithm>
#include <exception>

#include "pareto_cover/errors.hpp"
#include "pareto_cover/numerics.hpp"

namespace pareto_cover {

namespace {

void require_open_unit(const Rational& x, const char* name) {
  if (x <= 0 || x >= 1) {
    throw ValidationError(std::string(name) + " must lie in (0,1), got " +
                          format_rational(x));
  }
}

}  // namespace

std::int64_t query_grid_size(const Rational& epsilon, const Rational& alpha) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(alpha, "alpha");
  return ceil_log(Rational(1 + epsilon), Rational(1 / (epsilon * alpha)));
}

QueryGrid query_coordinates(const Rational& epsilon, const Rational& alpha) {
  const std::int64_t m = query_grid_size(epsilon, alpha);
  QueryGrid grid{epsilon, alpha, {}};
  grid.values.reserve(static_cast<std::size_t>(m) + 2);
  grid.values.emplace_back(0);
  const Rational ratio = 1 + epsilon;
  Rational v = epsilon * alpha;
  for (std::int64_t l = 1; l <= m && v < 1; ++l) {
    grid.values.push_back(v);
    v *= ratio;
  }
  grid.values.emplace_back(1);
  return grid;
}

Cover round_cover_up(const Cover& cover, const QueryGrid& grid) {
  Cover out = cover;
  for (auto& point : out.points) {
    for (auto& x : point) {
      if (x < 0 || x > 1) throw ValidationError("cover coordinate outside [0,1]");
      x = *std::lower_bound(grid.values.begin(), grid.values.end(), x);
    }
  }
  return out;
}

bool is_on_grid(const Cover& cover, const QueryGrid& grid) {
  for (const auto& point : cover.points) {
    for (const auto& x : point) {
      if (!std::binary_search(grid.values.begin(), grid.values.end(), x)) return false;
    }
  }
  return true;
}

FptasParameters fptas_parameters(const Rational& gamma, int n) {
  if (n < 1) throw ValidationError("n must be positive");
  return {Rational(gamma / (60 * n)), Rational(gamma / 15)};
}

Rational max_gamma() {
  Rational tiny(1, 1u << 20);
  return 1 - tiny;
}

Discretization discretize(const ContinuousInstance& instance, const Rational& gamma) {
  if (gamma <= 0) throw ValidationError("gamma must be positive");
  std::vector<std::string> warnings;
  Rational g = gamma;
  if (g >= 1) {
    g = max_gamma();
    warnings.push_back("gamma " + format_rational(gamma) + " clamped to " +
                       format_rational(g));
  }
  const int n = instance.n();
  const Rational epsilon = fptas_parameters(g, n).epsilon;
  QueryGrid grid = query_coordinates(epsilon, instance.alpha());
  const std::size_t width = grid.values.size();
  const Rational lower = 1 / Rational(1 + epsilon);
  const Rational upper = 1 + epsilon;

  std::vector<std::vector<Rational>> probs(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      const auto& oracle = instance.oracles()[static_cast<std::size_t>(i)];
      std::vector<Rational> row(width);
      Rational total = 0;
      for (std::size_t l = 0; l < width; ++l) {
        const Rational lo = l == 0 ? Rational(-1) : grid.values[l - 1];
        row[l] = oracle->query(lo, grid.values[l], epsilon);
        if (row[l] < 0) {
          throw OracleContractError("oracle " + std::to_string(i) +
                                    " returned a negative mass");
        }
        total += row[l];
      }
      if (total < lower || total > upper) {
        throw OracleContractError("oracle " + std::to_string(i) + " total mass " +
                                  format_rational(total) +
                                  " outside the accuracy sandwich");
      }
      for (auto& p : row) p /= total;
      probs[static_cast<std::size_t>(i)] = std::move(row);
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  DiscreteProductInstance discrete(grid.values, std::move(probs), instance.costs(),
                                   instance.k());
  return {std::move(discrete), std::move(grid), std::move(g), std::move(warnings)};
}

}  // namespace pareto_cover
