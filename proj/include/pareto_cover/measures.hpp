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

// Product measures on [0,1]^n: discrete instances over a common support grid,
// and continuous instances whose coordinate measures are only reachable
// through interval-mass oracles.

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pareto_cover/rational.hpp"

namespace pareto_cover {

using Point = std::vector<Rational>;

// An ordered list of points b^1, ..., b^k in [0,1]^n.
struct Cover {
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
  int dimension() const {
    return points.empty() ? 0 : static_cast<int>(points.front().size());
  }
  bool operator==(const Cover&) const = default;
};

// Throws ValidationError unless every point has n coordinates in [0,1].
void validate_cover(const Cover& cover, int n);

// Interval mass mu_i((lo, hi] ∩ [0,1]) for one coordinate measure.
using IntervalMassFn =
    std::function<Rational(const ExtendedRational&, const ExtendedRational&)>;

// Discrete product measure over the support grid 0 = a_0 < ... < a_{M+1} = 1,
// together with a linear cost vector and a cover budget k.
class DiscreteProductInstance {
 public:
  // Validates strictly: grid endpoints and order, every row a probability
  // vector summing to exactly 1, non-negative costs, k >= 1.
  DiscreteProductInstance(std::vector<Rational> grid,
                          std::vector<std::vector<Rational>> probs,
                          std::vector<Rational> costs, int k);

  int n() const { return static_cast<int>(costs_.size()); }
  int k() const { return k_; }
  int grid_size() const { return static_cast<int>(grid_.size()); }
  const std::vector<Rational>& grid() const { return grid_; }
  const std::vector<std::vector<Rational>>& probs() const { return probs_; }
  const std::vector<Rational>& costs() const { return costs_; }

  // l_i = max{l : p^i_l > 0}.
  int top_index(int i) const { return top_index_[static_cast<std::size_t>(i)]; }
  // a^*_i = a_{l_i}; a cover is feasible iff one of its points dominates a^*.
  Point a_star() const;

  // Sum of p^i_l over grid values a < a_l <= b.
  Rational interval_mass(int i, const ExtendedRational& a,
                         const ExtendedRational& b) const;

  // Same as interval_mass with both ends given as grid indices; index -1
  // stands for -inf. Returns 0 when lo >= hi.
  const Rational& cumulative(int i, int index) const;
  Rational index_mass(int i, int lo, int hi) const;

  // E[X_i].
  Rational mean(int i) const;

  // Index of the largest grid value <= x (x in [0,1]).
  int floor_index(const Rational& x) const;

  IntervalMassFn coordinate_mass(int i) const;

  DiscreteProductInstance with_k(int k) const;

 private:
  std::vector<Rational> grid_;
  std::vector<std::vector<Rational>> probs_;
  std::vector<Rational> costs_;
  int k_;
  std::vector<int> top_index_;
  std::vector<std::vector<Rational>> cumulative_;  // per coordinate, prefix sums
};

// Bernoulli product on {0,1}^n: coordinate i equals 1 with probability p_i.
DiscreteProductInstance bernoulli_instance(std::span<const Rational> p,
                                           std::span<const Rational> c, int k);

// Oracle sigma(a, b, delta) approximating mu((a,b] ∩ [0,1]) within a factor
// (1 + delta) in both directions, for -1 <= a < b <= 1 and delta in (0,1).
class MeasureOracle {
 public:
  virtual ~MeasureOracle() = default;

  // Validates the query domain, then forwards to do_query.
  Rational query(const Rational& a, const Rational& b,
                 const Rational& delta) const;

  // True when query returns the exact mass for every delta.
  virtual bool is_exact() const = 0;
  virtual std::string kind() const = 0;

 protected:
  virtual Rational do_query(const Rational& a, const Rational& b,
                            const Rational& delta) const = 0;
};

using OraclePtr = std::shared_ptr<const MeasureOracle>;

class UniformOracle final : public MeasureOracle {
 public:
  bool is_exact() const override { return true; }
  std::string kind() const override { return "uniform"; }

 protected:
  Rational do_query(const Rational& a, const Rational& b,
                    const Rational& delta) const override;
};

struct Atom {
  Rational value;
  Rational mass;
};

class FiniteSupportOracle final : public MeasureOracle {
 public:
  explicit FiniteSupportOracle(std::vector<Atom> atoms);

  bool is_exact() const override { return true; }
  std::string kind() const override { return "finite"; }
  const std::vector<Atom>& atoms() const { return atoms_; }

 protected:
  Rational do_query(const Rational& a, const Rational& b,
                    const Rational& delta) const override;

 private:
  std::vector<Atom> atoms_;  // sorted by value
};

// Step density: densities[t] on (breakpoints[t], breakpoints[t+1]].
class PiecewiseConstantOracle final : public MeasureOracle {
 public:
  PiecewiseConstantOracle(std::vector<Rational> breakpoints,
                          std::vector<Rational> densities);

  bool is_exact() const override { return true; }
  std::string kind() const override { return "piecewise"; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& densities() const { return densities_; }

 protected:
  Rational do_query(const Rational& a, const Rational& b,
                    const Rational& delta) const override;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> densities_;
};

OraclePtr uniform_oracle();
OraclePtr finite_support_oracle(std::vector<Atom> atoms);
OraclePtr piecewise_constant_oracle(std::vector<Rational> breakpoints,
                                    std::vector<Rational> densities);

// Oracle-defined product measure with costs, budget k, and a lower bound
// alpha on every coordinate mean.
class ContinuousInstance {
 public:
  ContinuousInstance(std::vector<OraclePtr> oracles, std::vector<Rational> costs,
                     int k, Rational alpha);

  int n() const { return static_cast<int>(costs_.size()); }
  int k() const { return k_; }
  const std::vector<OraclePtr>& oracles() const { return oracles_; }
  const std::vector<Rational>& costs() const { return costs_; }
  const Rational& alpha() const { return alpha_; }
  bool all_exact() const;

  // Exact interval masses; throws ContractError unless oracle i is exact.
  IntervalMassFn coordinate_mass(int i) const;

 private:
  std::vector<OraclePtr> oracles_;
  std::vector<Rational> costs_;
  int k_;
  Rational alpha_;
};

}  // namespace pareto_cover
