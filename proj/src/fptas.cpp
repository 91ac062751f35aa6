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

#include "pareto_cover/fptas.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <unordered_map>

#include "pareto_cover/config.hpp"
#include "pareto_cover/discretizer.hpp"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/evaluator.hpp"

namespace pareto_cover {

namespace {

using RawKey = std::vector<std::int64_t>;

struct RawKeyHash {
  std::size_t operator()(const RawKey& key) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::int64_t v : key) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

RawKey to_raw(const Candidate& c) {
  RawKey key;
  key.reserve(c.probs.size() + c.costs.size());
  for (auto v : c.probs) key.push_back(v.is_zero() ? INT64_MIN : v.exponent());
  for (auto v : c.costs) key.push_back(v.is_zero() ? INT64_MIN : v.exponent());
  return key;
}

ExponentOrZero from_raw(std::int64_t raw) {
  return raw == INT64_MIN ? ExponentOrZero::zero() : ExponentOrZero::power(raw);
}

Candidate from_raw(const RawKey& key, int stage, int k) {
  Candidate c;
  c.stage = stage;
  const std::size_t width = std::size_t{1} << k;
  for (std::size_t t = 0; t < width; ++t) c.probs.push_back(from_raw(key[t]));
  for (std::size_t t = width; t < key.size(); ++t) c.costs.push_back(from_raw(key[t]));
  return c;
}

// The single stage-0 state: all mass on J = [k], every prefix cost zero.
StageEntry virtual_root(int k) {
  StageEntry root;
  root.candidate.stage = 0;
  root.candidate.probs.assign(std::size_t{1} << k, ExponentOrZero::zero());
  root.candidate.probs.back() = ExponentOrZero::power(0);
  root.candidate.costs.assign(static_cast<std::size_t>(k), ExponentOrZero::zero());
  return root;
}

std::uint64_t checked_pow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int t = 0; t < e; ++t) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

std::uint64_t full_column_count(const DiscreteProductInstance& instance) {
  return checked_pow(static_cast<std::uint64_t>(instance.grid_size()), instance.k() - 1);
}

bool column_allowed(const std::vector<int>& beta, int stage, const FptasOptions& options) {
  if (!options.symmetry_pruning || stage != 1) return true;
  for (std::size_t j = 1; j + 1 < beta.size(); ++j) {
    if (beta[j - 1] > beta[j]) return false;
  }
  return true;
}

std::vector<std::uint64_t> allowed_columns(const DiscreteProductInstance& instance,
                                           int stage, const FptasOptions& options) {
  const std::uint64_t total = full_column_count(instance);
  std::vector<std::uint64_t> out;
  for (std::uint64_t col = 0; col < total; ++col) {
    if (!options.symmetry_pruning || stage != 1 ||
        column_allowed(decode_column(instance, stage, col), stage, options)) {
      out.push_back(col);
    }
  }
  return out;
}

StageTable finish_table(int stage, int k, std::vector<RawKey>& keys,
                        std::vector<std::int64_t>& parents,
                        std::vector<std::uint64_t>& columns) {
  std::vector<std::size_t> order(keys.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  StageTable table;
  table.stage = stage;
  table.entries.reserve(order.size());
  for (std::size_t t : order) {
    table.entries.push_back({from_raw(keys[t], stage, k), parents[t], columns[t]});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Reference kernel: direct transcription with rational arithmetic.

StageTable build_reference(const std::vector<StageEntry>& parents,
                           const DiscreteProductInstance& instance, int stage,
                           const Rational& delta, const FptasOptions& options,
                           bool has_parents) {
  const int k = instance.k();
  const int i = stage - 1;
  const unsigned full = (1u << k) - 1;
  const Rational base = 1 + delta;
  const auto& grid = instance.grid();
  const Rational& ci = instance.costs()[static_cast<std::size_t>(i)];
  const std::vector<std::uint64_t> columns = allowed_columns(instance, stage, options);

  std::map<Candidate, std::size_t> seen;
  std::vector<RawKey> keys;
  std::vector<std::int64_t> parent_of;
  std::vector<std::uint64_t> column_of;

  for (std::size_t p = 0; p < parents.size(); ++p) {
    const Candidate& prev = parents[p].candidate;
    std::vector<Rational> prob_values, cost_values;
    for (auto v : prev.probs) prob_values.push_back(v.value(base));
    for (auto v : prev.costs) cost_values.push_back(v.value(base));

    for (std::uint64_t col : columns) {
      const std::vector<int> beta = decode_column(instance, stage, col);
      std::vector<Rational> b(beta.size());
      for (std::size_t j = 0; j < beta.size(); ++j) b[j] = grid[static_cast<std::size_t>(beta[j])];

      Candidate next;
      next.stage = stage;
      for (unsigned set = 0; set <= full; ++set) {
        ExtendedRational hi = ExtendedRational::pos_inf();
        for (unsigned j = 0; j < b.size(); ++j) {
          if ((set >> j & 1u) && (hi.is_pos_inf() || b[j] < hi.value())) hi = b[j];
        }
        Rational sum = 0;
        for (unsigned big = set; big <= full; big = (big + 1) | set) {
          if (prob_values[big] != 0) {
            ExtendedRational lo = ExtendedRational::neg_inf();
            const unsigned rest = big & ~set;
            for (unsigned j = 0; j < b.size(); ++j) {
              if ((rest >> j & 1u) && (lo.is_neg_inf() || b[j] > lo.value())) lo = b[j];
            }
            sum += prob_values[big] * instance.interval_mass(i, lo, hi);
          }
          if (big == full) break;
        }
        next.probs.push_back(round_to_power(sum, delta));
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        next.costs.push_back(round_to_power(cost_values[j] + ci * b[j], delta));
      }
      if (seen.emplace(next, keys.size()).second) {
        keys.push_back(to_raw(next));
        parent_of.push_back(has_parents ? static_cast<std::int64_t>(p) : -1);
        column_of.push_back(col);
      }
    }
  }
  return finish_table(stage, k, keys, parent_of, column_of);
}

// ---------------------------------------------------------------------------
// Parallel kernel. For a parent with exponents e_L <= 0 write f_L = -e_L and
// F = max f_L. With 1 + delta = N / D and masses scaled to integers by the
// row denominator Q, P_L = D^{f_L} N^{F - f_L} / N^F, so every new P_J is an
// integer X_J over the common denominator N^F Q.

struct StageContext {
  const DiscreteProductInstance* instance;
  int stage;
  int k;
  int grid_size;
  int top;                               // grid index of a^*_i
  std::vector<Integer> cum;              // cum[l + 1] = Q * Pr[X_i <= a_l]
  Integer q;                             // row denominator
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> cost_step;
};

StageContext make_context(const DiscreteProductInstance& instance, int stage,
                          const std::vector<StageEntry>& parents, const Rational& delta) {
  StageContext ctx;
  ctx.instance = &instance;
  ctx.stage = stage;
  ctx.k = instance.k();
  ctx.grid_size = instance.grid_size();
  const int i = stage - 1;
  ctx.top = instance.top_index(i);
  ctx.q = 1;
  for (const auto& p : instance.probs()[static_cast<std::size_t>(i)]) {
    mpz_lcm(ctx.q.get_mpz_t(), ctx.q.get_mpz_t(), p.get_den().get_mpz_t());
  }
  ctx.cum.resize(static_cast<std::size_t>(ctx.grid_size) + 1);
  for (int l = -1; l < ctx.grid_size; ++l) {
    const Rational scaled = instance.cumulative(i, l) * ctx.q;
    ctx.cum[static_cast<std::size_t>(l + 1)] = scaled.get_num();
  }
  // New prefix-cost exponent for every (old exponent, grid index) pair.
  const Rational base = 1 + delta;
  const Rational& ci = instance.costs()[static_cast<std::size_t>(i)];
  for (const auto& entry : parents) {
    for (auto v : entry.candidate.costs) {
      const std::int64_t raw = v.is_zero() ? INT64_MIN : v.exponent();
      if (ctx.cost_step.count(raw)) continue;
      const Rational old = v.value(base);
      std::vector<std::int64_t> row(static_cast<std::size_t>(ctx.grid_size));
      for (int l = 0; l < ctx.grid_size; ++l) {
        const auto r = round_to_power(old + ci * instance.grid()[static_cast<std::size_t>(l)], delta);
        row[static_cast<std::size_t>(l)] = r.is_zero() ? INT64_MIN : r.exponent();
      }
      ctx.cost_step.emplace(raw, std::move(row));
    }
  }
  return ctx;
}

struct Workspace {
  explicit Workspace(const Rational& base) : ladder(base) {}

  PowerLadder ladder;
  std::vector<Integer> weight;  // W_L
  std::vector<Integer> x;       // X_J
  Integer denom;                // N^F Q
  Integer diff;
  std::vector<int> maxidx, minidx;
  std::vector<unsigned> nonzero;
};

void prepare_parent(const StageContext& ctx, const Candidate& prev, Workspace& ws) {
  const std::size_t width = prev.probs.size();
  ws.weight.resize(width);
  ws.x.resize(width);
  ws.nonzero.clear();
  std::int64_t fmax = 0;
  for (unsigned l = 0; l < width; ++l) {
    if (prev.probs[l].is_zero()) continue;
    ws.nonzero.push_back(l);
    fmax = std::max(fmax, -prev.probs[l].exponent());
  }
  for (unsigned l : ws.nonzero) {
    const std::int64_t f = -prev.probs[l].exponent();
    mpz_mul(ws.weight[l].get_mpz_t(), ws.ladder.den_pow(f).get_mpz_t(),
            ws.ladder.num_pow(fmax - f).get_mpz_t());
  }
  mpz_mul(ws.denom.get_mpz_t(), ws.ladder.num_pow(fmax).get_mpz_t(), ctx.q.get_mpz_t());
}

void expand(const StageContext& ctx, const Candidate& prev, const std::vector<int>& beta,
            Workspace& ws, RawKey& out) {
  const unsigned width = 1u << ctx.k;
  ws.maxidx.assign(width, -1);
  ws.minidx.assign(width, ctx.grid_size - 1);
  for (unsigned s = 1; s < width; ++s) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(s));
    const unsigned rest = s & (s - 1);
    ws.maxidx[s] = std::max(ws.maxidx[rest], beta[low]);
    ws.minidx[s] = std::min(ws.minidx[rest], beta[low]);
  }
  for (unsigned j = 0; j < width; ++j) ws.x[j] = 0;
  for (unsigned big : ws.nonzero) {
    for (unsigned set = big;; set = (set - 1) & big) {
      const int lo = ws.maxidx[big & ~set];
      const int hi = ws.minidx[set];
      if (hi > lo) {
        mpz_sub(ws.diff.get_mpz_t(), ctx.cum[static_cast<std::size_t>(hi + 1)].get_mpz_t(),
                ctx.cum[static_cast<std::size_t>(lo + 1)].get_mpz_t());
        mpz_addmul(ws.x[set].get_mpz_t(), ws.weight[big].get_mpz_t(), ws.diff.get_mpz_t());
      }
      if (set == 0) break;
    }
  }
  out.resize(width + static_cast<unsigned>(ctx.k));
  for (unsigned set = 0; set < width; ++set) {
    out[set] = sgn(ws.x[set]) == 0 ? INT64_MIN : ws.ladder.floor_log(ws.x[set], ws.denom);
  }
  for (int j = 0; j < ctx.k; ++j) {
    const auto v = prev.costs[static_cast<std::size_t>(j)];
    const auto& row = ctx.cost_step.find(v.is_zero() ? INT64_MIN : v.exponent())->second;
    out[width + static_cast<unsigned>(j)] = row[static_cast<std::size_t>(beta[static_cast<std::size_t>(j)])];
  }
}

StageTable build_parallel(const std::vector<StageEntry>& parents,
                          const DiscreteProductInstance& instance, int stage,
                          const Rational& delta, const FptasOptions& options,
                          bool has_parents) {
  const int k = instance.k();
  const StageContext ctx = make_context(instance, stage, parents, delta);
  const std::vector<std::uint64_t> columns = allowed_columns(instance, stage, options);
  std::vector<std::vector<int>> betas;
  betas.reserve(columns.size());
  for (auto col : columns) betas.push_back(decode_column(instance, stage, col));

  const Rational base = 1 + delta;
  const int threads = std::max(1, omp_get_max_threads());
  std::vector<Workspace> spaces;
  spaces.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) spaces.emplace_back(base);

  std::unordered_map<RawKey, std::size_t, RawKeyHash> seen;
  std::vector<RawKey> keys;
  std::vector<std::int64_t> parent_of;
  std::vector<std::uint64_t> column_of;

  // Parents are processed in blocks; within a block the expansions run in
  // parallel, then the block is merged in (parent, column) order so the
  // first-inserted witness does not depend on scheduling.
  const std::size_t per_block =
      std::max<std::size_t>(1, (std::size_t{1} << 16) / std::max<std::size_t>(1, columns.size()));
  std::vector<std::vector<RawKey>> produced;
  for (std::size_t start = 0; start < parents.size(); start += per_block) {
    const std::size_t stop = std::min(parents.size(), start + per_block);
    produced.assign(stop - start, {});
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t p = static_cast<std::int64_t>(start); p < static_cast<std::int64_t>(stop); ++p) {
      Workspace& ws = spaces[static_cast<std::size_t>(omp_get_thread_num())];
      const Candidate& prev = parents[static_cast<std::size_t>(p)].candidate;
      prepare_parent(ctx, prev, ws);
      auto& out = produced[static_cast<std::size_t>(p) - start];
      out.resize(betas.size());
      for (std::size_t t = 0; t < betas.size(); ++t) expand(ctx, prev, betas[t], ws, out[t]);
    }
    for (std::size_t p = start; p < stop; ++p) {
      auto& out = produced[p - start];
      for (std::size_t t = 0; t < out.size(); ++t) {
        if (seen.count(out[t])) continue;
        seen.emplace(out[t], keys.size());
        keys.push_back(std::move(out[t]));
        parent_of.push_back(has_parents ? static_cast<std::int64_t>(p) : -1);
        column_of.push_back(columns[t]);
      }
    }
  }
  return finish_table(stage, k, keys, parent_of, column_of);
}

StageTable build_stage(const std::vector<StageEntry>& parents,
                       const DiscreteProductInstance& instance, int stage,
                       const Rational& delta, const FptasOptions& options,
                       bool has_parents) {
  return options.kernel == Kernel::kReference
             ? build_reference(parents, instance, stage, delta, options, has_parents)
             : build_parallel(parents, instance, stage, delta, options, has_parents);
}

void require_eps(const Rational& eps) {
  if (eps <= 0 || eps >= 1) {
    throw ValidationError("eps must lie in (0,1), got " + format_rational(eps));
  }
}

}  // namespace

std::string to_string(const Candidate& c) {
  std::string out = "(" + std::to_string(c.stage) + ", P=[";
  for (std::size_t t = 0; t < c.probs.size(); ++t) {
    out += (t ? " " : "") + to_string(c.probs[t]);
  }
  out += "], C=[";
  for (std::size_t t = 0; t < c.costs.size(); ++t) {
    out += (t ? " " : "") + to_string(c.costs[t]);
  }
  return out + "])";
}

Rational fptas_delta(const Rational& eps, int n) {
  if (n < 1) throw ValidationError("n must be positive");
  return eps / (4 * n);
}

std::uint64_t column_count(const DiscreteProductInstance& instance,
                           const FptasOptions& options, int stage) {
  if (!options.symmetry_pruning || stage != 1) return full_column_count(instance);
  // Non-decreasing (k-1)-tuples over g values: C(g + k - 2, k - 1).
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(instance.grid_size() + instance.k() - 2),
               static_cast<unsigned long>(instance.k() - 1));
  return out.fits_ulong_p() ? out.get_ui() : UINT64_MAX;
}

std::vector<int> decode_column(const DiscreteProductInstance& instance, int stage,
                               std::uint64_t column) {
  const int k = instance.k();
  const auto g = static_cast<std::uint64_t>(instance.grid_size());
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int j = k - 2; j >= 0; --j) {
    beta[static_cast<std::size_t>(j)] = static_cast<int>(column % g);
    column /= g;
  }
  beta[static_cast<std::size_t>(k - 1)] = instance.top_index(stage - 1);
  return beta;
}

StageTable seed_candidates(const DiscreteProductInstance& instance,
                           const Rational& delta, const FptasOptions& options) {
  return build_stage({virtual_root(instance.k())}, instance, 1, delta, options, false);
}

StageTable extend_candidates(const StageTable& prev,
                             const DiscreteProductInstance& instance, int stage,
                             const Rational& delta, const FptasOptions& options) {
  if (prev.entries.empty()) throw ContractError("cannot extend an empty table");
  if (stage < 2 || stage > instance.n() || prev.stage != stage - 1) {
    throw ContractError("extend_candidates: stage " + std::to_string(stage) +
                        " does not follow table stage " + std::to_string(prev.stage));
  }
  return build_stage(prev.entries, instance, stage, delta, options, true);
}

Rational candidate_cost(const Candidate& c, const Rational& delta, int n) {
  if (c.stage != n) {
    throw ContractError("candidate cost needs a stage-" + std::to_string(n) +
                        " candidate, got stage " + std::to_string(c.stage));
  }
  const Rational base = 1 + delta;
  Rational total = 0;
  for (unsigned set = 1; set < c.probs.size(); ++set) {
    if (c.probs[set].is_zero()) continue;
    ExponentOrZero best;
    bool first = true;
    for (unsigned j = 0; j < c.costs.size(); ++j) {
      if (!(set >> j & 1u)) continue;
      if (first || c.costs[j] < best) best = c.costs[j];
      first = false;
    }
    if (best.is_zero()) continue;
    total += pow_rational(base, c.probs[set].exponent() + best.exponent());
  }
  return total;
}

ExactCandidate exact_candidate(const DiscreteProductInstance& instance,
                               const Cover& cover, int stage) {
  validate_cover(cover, instance.n());
  ExactCandidate out;
  auto col = [&](int i) {
    std::vector<Rational> c;
    for (const auto& p : cover.points) c.push_back(p[static_cast<std::size_t>(i)]);
    return c;
  };
  JSetDistribution dist = j_stage_init(col(0), instance.coordinate_mass(0));
  for (int i = 1; i < stage; ++i) dist = j_stage_step(dist, col(i), instance.coordinate_mass(i));
  out.probs = dist.masses;
  for (const auto& p : cover.points) {
    Rational sum = 0;
    for (int i = 0; i < stage; ++i) {
      sum += instance.costs()[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
    }
    out.costs.push_back(sum);
  }
  return out;
}

FptasRun run_fptas(const DiscreteProductInstance& instance, const Rational& eps,
                   const FptasOptions& options) {
  require_eps(eps);
  require_cover_size(instance.k(), "fptas");
  FptasRun run;
  run.delta = fptas_delta(eps, instance.n());
  // Lower bound on the whole run: one parent per stage.
  std::uint64_t floor_total = 0;
  for (int stage = 1; stage <= instance.n(); ++stage) {
    const std::uint64_t cols = column_count(instance, options, stage);
    floor_total = cols > UINT64_MAX - floor_total ? UINT64_MAX : floor_total + cols;
  }
  if (floor_total > options.max_expansions) {
    throw ResourceError("run needs at least " + std::to_string(floor_total) +
                        " expansions over " + std::to_string(instance.n()) +
                        " stages; budget " + std::to_string(options.max_expansions));
  }
  for (int stage = 1; stage <= instance.n(); ++stage) {
    const std::uint64_t parents = stage == 1 ? 1 : run.stages.back().size();
    const std::uint64_t cols = column_count(instance, options, stage);
    const std::uint64_t needed =
        cols > UINT64_MAX / std::max<std::uint64_t>(parents, 1) ? UINT64_MAX : parents * cols;
    if (needed > options.max_expansions - std::min(run.expansions, options.max_expansions)) {
      throw ResourceError("stage " + std::to_string(stage) + " needs " +
                          std::to_string(parents) + " x " + std::to_string(cols) +
                          " expansions; budget " + std::to_string(options.max_expansions) +
                          " with " + std::to_string(run.expansions) + " already spent");
    }
    run.expansions += needed;
    if (stage == 1) {
      run.stages.push_back(seed_candidates(instance, run.delta, options));
    } else {
      run.stages.push_back(
          extend_candidates(run.stages.back(), instance, stage, run.delta, options));
    }
  }
  return run;
}

Cover witness(const FptasRun& run, const DiscreteProductInstance& instance, int stage,
              std::size_t index) {
  const int n = instance.n();
  const int k = instance.k();
  Cover cover;
  cover.points.assign(static_cast<std::size_t>(k), Point(static_cast<std::size_t>(n), Rational(0)));
  cover.points.back() = instance.a_star();
  std::int64_t at = static_cast<std::int64_t>(index);
  for (int s = stage; s >= 1; --s) {
    const StageEntry& e = run.stages[static_cast<std::size_t>(s - 1)].entries[static_cast<std::size_t>(at)];
    const std::vector<int> beta = decode_column(instance, s, e.column);
    for (int j = 0; j < k; ++j) {
      cover.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(s - 1)] =
          instance.grid()[static_cast<std::size_t>(beta[static_cast<std::size_t>(j)])];
    }
    at = e.parent;
  }
  return cover;
}

TableBound table_size_bound(const DiscreteProductInstance& instance, const Rational& delta) {
  const int n = instance.n();
  const int k = instance.k();
  const Rational base = 1 + delta;
  TableBound out;
  Rational pmin = 1;
  for (const auto& row : instance.probs()) {
    for (const auto& p : row) {
      if (p > 0 && p < pmin) pmin = p;
    }
  }
  out.alpha_floor = n + 2 + Integer(n) * Integer(floor_log(base, 1 / pmin));
  Rational csum = 0;
  Rational cmin = instance.costs().front();
  for (const auto& c : instance.costs()) {
    csum += c;
    cmin = std::min(cmin, c);
  }
  if (cmin == 0) {
    out.beta_floor = 0;
    return out;
  }
  const Rational& a1 = instance.grid()[1];
  out.beta_floor = n + 2 + Integer(floor_log(base, csum / cmin)) + Integer(floor_log(base, 1 / a1));
  Integer value;
  mpz_pow_ui(value.get_mpz_t(), out.alpha_floor.get_mpz_t(), 1ul << k);
  Integer beta_pow;
  mpz_pow_ui(beta_pow.get_mpz_t(), out.beta_floor.get_mpz_t(), static_cast<unsigned long>(k));
  out.value = value * beta_pow * n;
  return out;
}

DiscreteSolution solve_discrete(const DiscreteProductInstance& instance, const Rational& eps,
                                const FptasOptions& options) {
  const FptasRun run = run_fptas(instance, eps, options);
  const int n = instance.n();
  const StageTable& last = run.stages.back();

  std::vector<Rational> costs(last.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(last.size()); ++t) {
    costs[static_cast<std::size_t>(t)] =
        candidate_cost(last.entries[static_cast<std::size_t>(t)].candidate, run.delta, n);
  }
  std::size_t best = 0;
  for (std::size_t t = 1; t < costs.size(); ++t) {
    if (costs[t] < costs[best]) best = t;
  }

  DiscreteSolution out;
  out.cover = witness(run, instance, n, best);
  out.cost = expected_cost(instance, out.cover);
  out.candidate_cost = costs[best];
  auto& d = out.diagnostics;
  d.delta = run.delta;
  for (const auto& table : run.stages) {
    d.table_sizes.push_back(table.size());
    d.total_candidates += table.size();
  }
  d.expansions = run.expansions;
  d.bound = table_size_bound(instance, run.delta);
  d.bound_holds = !d.bound.value || Integer(static_cast<unsigned long>(d.total_candidates)) <= *d.bound.value;
  return out;
}

ContinuousSolution solve_continuous(const ContinuousInstance& instance, const Rational& gamma,
                                    const FptasOptions& options) {
  Discretization disc = discretize(instance, gamma);
  const FptasParameters params = fptas_parameters(disc.gamma, instance.n());
  DiscreteSolution inner = solve_discrete(disc.instance, params.inner_eps, options);
  ContinuousSolution out;
  out.cover = std::move(inner.cover);
  out.discrete_cost = inner.cost;
  if (instance.all_exact()) out.continuous_cost = expected_cost(instance, out.cover);
  out.gamma = disc.gamma;
  out.inner_eps = params.inner_eps;
  out.grid_interior = disc.grid.interior();
  out.warnings = std::move(disc.warnings);
  out.diagnostics = std::move(inner.diagnostics);
  return out;
}

}  // namespace pareto_cover
