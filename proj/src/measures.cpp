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

#include "pareto_cover/measures.hpp"

#include <algorithm>
#include <string>

#include "pareto_cover/errors.hpp"

namespace pareto_cover {

namespace {

// Largest index l with grid[l] <= x, -1 when x is below grid[0] or -inf.
int largest_at_most(const std::vector<Rational>& grid, const ExtendedRational& x) {
  if (x.is_neg_inf()) return -1;
  if (x.is_pos_inf()) return static_cast<int>(grid.size()) - 1;
  const auto it = std::upper_bound(grid.begin(), grid.end(), x.value());
  return static_cast<int>(it - grid.begin()) - 1;
}

Rational clamp01(const Rational& x) {
  if (x < 0) return Rational(0);
  if (x > 1) return Rational(1);
  return x;
}

}  // namespace

void validate_cover(const Cover& cover, int n) {
  if (cover.points.empty()) throw ValidationError("cover has no points");
  for (const auto& point : cover.points) {
    if (static_cast<int>(point.size()) != n) {
      throw ValidationError("cover point has " + std::to_string(point.size()) +
                            " coordinates, instance has " + std::to_string(n));
    }
    for (const auto& v : point) {
      if (v < 0 || v > 1) {
        throw ValidationError("cover coordinate " + format_rational(v) +
                              " outside [0,1]");
      }
    }
  }
}

DiscreteProductInstance::DiscreteProductInstance(
    std::vector<Rational> grid, std::vector<std::vector<Rational>> probs,
    std::vector<Rational> costs, int k)
    : grid_(std::move(grid)),
      probs_(std::move(probs)),
      costs_(std::move(costs)),
      k_(k) {
  for (auto& v : grid_) v.canonicalize();
  for (auto& v : costs_) v.canonicalize();
  for (auto& row : probs_) {
    for (auto& v : row) v.canonicalize();
  }
  if (grid_.size() < 2) throw ValidationError("grid needs at least 0 and 1");
  if (grid_.front() != 0 || grid_.back() != 1) {
    throw ValidationError("grid must start at 0 and end at 1");
  }
  for (std::size_t l = 1; l < grid_.size(); ++l) {
    if (!(grid_[l - 1] < grid_[l])) {
      throw ValidationError("grid must be strictly increasing");
    }
  }
  if (costs_.empty()) throw ValidationError("instance needs n >= 1");
  if (probs_.size() != costs_.size()) {
    throw ValidationError("probability table has " +
                          std::to_string(probs_.size()) + " rows, expected " +
                          std::to_string(costs_.size()));
  }
  if (k_ < 1) throw ValidationError("k must be at least 1");
  for (const auto& c : costs_) {
    if (c < 0) throw ValidationError("costs must be non-negative");
  }
  top_index_.reserve(probs_.size());
  cumulative_.reserve(probs_.size());
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const auto& row = probs_[i];
    if (row.size() != grid_.size()) {
      throw ValidationError("probability row " + std::to_string(i) +
                            " does not match the grid size");
    }
    Rational sum = 0;
    int top = -1;
    std::vector<Rational> cum(row.size() + 1);
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (row[l] < 0 || row[l] > 1) {
        throw ValidationError("probability outside [0,1] in row " +
                              std::to_string(i));
      }
      if (row[l] > 0) top = static_cast<int>(l);
      sum += row[l];
      cum[l + 1] = sum;
    }
    if (sum != 1) {
      throw ValidationError("probability row " + std::to_string(i) +
                            " sums to " + format_rational(sum) + ", not 1");
    }
    top_index_.push_back(top);
    cumulative_.push_back(std::move(cum));
  }
}

Point DiscreteProductInstance::a_star() const {
  Point out;
  out.reserve(top_index_.size());
  for (int l : top_index_) out.push_back(grid_[static_cast<std::size_t>(l)]);
  return out;
}

const Rational& DiscreteProductInstance::cumulative(int i, int index) const {
  return cumulative_[static_cast<std::size_t>(i)][static_cast<std::size_t>(index + 1)];
}

Rational DiscreteProductInstance::index_mass(int i, int lo, int hi) const {
  if (lo >= hi) return Rational(0);
  return cumulative(i, hi) - cumulative(i, lo);
}

Rational DiscreteProductInstance::interval_mass(int i, const ExtendedRational& a,
                                                const ExtendedRational& b) const {
  return index_mass(i, largest_at_most(grid_, a), largest_at_most(grid_, b));
}

Rational DiscreteProductInstance::mean(int i) const {
  Rational out = 0;
  const auto& row = probs_[static_cast<std::size_t>(i)];
  for (std::size_t l = 0; l < row.size(); ++l) out += grid_[l] * row[l];
  return out;
}

int DiscreteProductInstance::floor_index(const Rational& x) const {
  return std::max(0, largest_at_most(grid_, ExtendedRational(x)));
}

IntervalMassFn DiscreteProductInstance::coordinate_mass(int i) const {
  return [this, i](const ExtendedRational& a, const ExtendedRational& b) {
    return interval_mass(i, a, b);
  };
}

DiscreteProductInstance DiscreteProductInstance::with_k(int k) const {
  return DiscreteProductInstance(grid_, probs_, costs_, k);
}

DiscreteProductInstance bernoulli_instance(std::span<const Rational> p,
                                           std::span<const Rational> c, int k) {
  if (p.size() != c.size()) {
    throw ValidationError("need as many probabilities as costs");
  }
  std::vector<std::vector<Rational>> probs;
  probs.reserve(p.size());
  for (const auto& pi : p) {
    if (pi < 0 || pi > 1) {
      throw ValidationError("Bernoulli probability " + format_rational(pi) +
                            " outside [0,1]");
    }
    probs.push_back({Rational(1 - pi), pi});
  }
  return DiscreteProductInstance({Rational(0), Rational(1)}, std::move(probs),
                                 std::vector<Rational>(c.begin(), c.end()), k);
}

Rational MeasureOracle::query(const Rational& a, const Rational& b,
                              const Rational& delta) const {
  if (a < -1 || !(a < b) || b > 1) {
    throw ValidationError("oracle query needs -1 <= a < b <= 1, got (" +
                          format_rational(a) + ", " + format_rational(b) + "]");
  }
  if (delta <= 0 || delta >= 1) {
    throw ValidationError("oracle accuracy delta must lie in (0,1)");
  }
  return do_query(a, b, delta);
}

Rational UniformOracle::do_query(const Rational& a, const Rational& b,
                                 const Rational& /*delta*/) const {
  const Rational lo = clamp01(a);
  const Rational hi = clamp01(b);
  return hi > lo ? Rational(hi - lo) : Rational(0);
}

FiniteSupportOracle::FiniteSupportOracle(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ValidationError("finite support needs atoms");
  Rational total = 0;
  for (const auto& atom : atoms_) {
    if (atom.value < 0 || atom.value > 1) {
      throw ValidationError("atom value outside [0,1]");
    }
    if (atom.mass < 0) throw ValidationError("atom mass must be non-negative");
    total += atom.mass;
  }
  if (total != 1) {
    throw ValidationError("atom masses sum to " + format_rational(total) +
                          ", not 1");
  }
  std::stable_sort(atoms_.begin(), atoms_.end(),
                   [](const Atom& x, const Atom& y) { return x.value < y.value; });
}

Rational FiniteSupportOracle::do_query(const Rational& a, const Rational& b,
                                       const Rational& /*delta*/) const {
  Rational out = 0;
  for (const auto& atom : atoms_) {
    if (a < atom.value && atom.value <= b) out += atom.mass;
  }
  return out;
}

PiecewiseConstantOracle::PiecewiseConstantOracle(std::vector<Rational> breakpoints,
                                                 std::vector<Rational> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
  if (breakpoints_.size() < 2 || densities_.size() + 1 != breakpoints_.size()) {
    throw ValidationError("piecewise density needs m+1 breakpoints and m densities");
  }
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw ValidationError("breakpoints must span [0,1]");
  }
  Rational integral = 0;
  for (std::size_t t = 0; t < densities_.size(); ++t) {
    if (!(breakpoints_[t] < breakpoints_[t + 1])) {
      throw ValidationError("breakpoints must be strictly increasing");
    }
    if (densities_[t] < 0) throw ValidationError("densities must be non-negative");
    integral += densities_[t] * (breakpoints_[t + 1] - breakpoints_[t]);
  }
  if (integral != 1) {
    throw ValidationError("density integrates to " + format_rational(integral) +
                          ", not 1");
  }
}

Rational PiecewiseConstantOracle::do_query(const Rational& a, const Rational& b,
                                           const Rational& /*delta*/) const {
  const Rational lo = clamp01(a);
  const Rational hi = clamp01(b);
  Rational out = 0;
  for (std::size_t t = 0; t < densities_.size(); ++t) {
    const Rational& left = std::max(lo, breakpoints_[t]);
    const Rational& right = std::min(hi, breakpoints_[t + 1]);
    if (left < right) out += densities_[t] * (right - left);
  }
  return out;
}

OraclePtr uniform_oracle() { return std::make_shared<UniformOracle>(); }

OraclePtr finite_support_oracle(std::vector<Atom> atoms) {
  return std::make_shared<FiniteSupportOracle>(std::move(atoms));
}

OraclePtr piecewise_constant_oracle(std::vector<Rational> breakpoints,
                                    std::vector<Rational> densities) {
  return std::make_shared<PiecewiseConstantOracle>(std::move(breakpoints),
                                                   std::move(densities));
}

ContinuousInstance::ContinuousInstance(std::vector<OraclePtr> oracles,
                                       std::vector<Rational> costs, int k,
                                       Rational alpha)
    : oracles_(std::move(oracles)),
      costs_(std::move(costs)),
      k_(k),
      alpha_(std::move(alpha)) {
  if (costs_.empty()) throw ValidationError("instance needs n >= 1");
  if (oracles_.size() != costs_.size()) {
    throw ValidationError("need one oracle per coordinate");
  }
  for (const auto& o : oracles_) {
    if (!o) throw ValidationError("null oracle");
  }
  for (const auto& c : costs_) {
    if (c < 0) throw ValidationError("costs must be non-negative");
  }
  if (k_ < 1) throw ValidationError("k must be at least 1");
  if (alpha_ <= 0 || alpha_ >= 1) throw ValidationError("alpha must lie in (0,1)");
}

bool ContinuousInstance::all_exact() const {
  return std::all_of(oracles_.begin(), oracles_.end(),
                     [](const OraclePtr& o) { return o->is_exact(); });
}

IntervalMassFn ContinuousInstance::coordinate_mass(int i) const {
  const OraclePtr& oracle = oracles_[static_cast<std::size_t>(i)];
  if (!oracle->is_exact()) {
    throw ContractError("coordinate " + std::to_string(i) +
                        " has an approximate oracle; discretize first");
  }
  return [oracle](const ExtendedRational& a, const ExtendedRational& b) {
    const Rational lo = a.is_finite() ? std::max(a.value(), Rational(-1))
                                      : Rational(-1);
    const Rational hi = b.is_finite() ? std::min(b.value(), Rational(1))
                                      : Rational(1);
    if (a.is_pos_inf() || b.is_neg_inf() || !(lo < hi)) return Rational(0);
    // Exact oracles ignore delta; any value in (0,1) is valid.
    return oracle->query(lo, hi, Rational(1, 2));
  };
}

}  // namespace pareto_cover
