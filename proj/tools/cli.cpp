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

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "pareto_cover/discretizer.hpp"
#include "pareto_cover/errors.hpp"
#include "pareto_cover/evaluator.hpp"
#include "pareto_cover/fptas.hpp"
#include "pareto_cover/oracle.hpp"
#include "plot.hpp"

namespace pareto_cover::cli {

namespace {

using io::Json;

struct Common {
  std::string output;
  bool decimal = false;
};

void emit(const Json& j, const Common& common, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (common.output.empty()) {
    out << text;
  } else {
    io::write_text(common.output, text);
  }
}

std::vector<std::int64_t> parse_integers(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational r = parse_rational(item);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
      throw ValidationError("expected an integer, got \"" + item + "\"");
    }
    out.push_back(r.get_num().get_si());
  }
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

io::AnyInstance load_instance(const std::string& path) {
  return io::instance_from_json(io::read_json_file(path));
}

const DiscreteProductInstance& require_discrete(const io::AnyInstance& inst, const char* what) {
  if (const auto* d = std::get_if<DiscreteProductInstance>(&inst)) return *d;
  throw ValidationError(std::string(what) + " needs a discrete instance");
}

const ContinuousInstance& require_continuous(const io::AnyInstance& inst, const char* what) {
  if (const auto* c = std::get_if<ContinuousInstance>(&inst)) return *c;
  throw ValidationError(std::string(what) + " needs a continuous instance");
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string bernoulli, costs, grid, probs, alpha = "1/2", reduction, partition, graph;
  int k = 2;
  int uniform = 0;
  int random = 0;
  int interior = 2;
  int parts = 2;
  std::uint64_t seed = 1;
};

DiscreteProductInstance random_instance(int n, int interior, int k, std::uint64_t seed) {
  if (n < 1 || interior < 0 || interior > 14) {
    throw ValidationError("random instances need n >= 1 and 0 <= interior <= 14");
  }
  std::mt19937_64 gen(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  std::set<Rational> inner;
  while (static_cast<int>(inner.size()) < interior) {
    const int den = uniform(2, 16);
    Rational v(uniform(1, den - 1), den);
    v.canonicalize();
    inner.insert(v);
  }
  std::vector<Rational> grid{Rational(0)};
  grid.insert(grid.end(), inner.begin(), inner.end());
  grid.emplace_back(1);
  std::vector<std::vector<Rational>> probs;
  std::vector<Rational> costs;
  for (int i = 0; i < n; ++i) {
    std::vector<int> w(grid.size());
    int total = 0;
    for (auto& x : w) total += (x = uniform(0, 2) == 0 ? 0 : uniform(1, 9));
    if (total == 0) total = w.back() = 1;
    std::vector<Rational> row;
    for (int x : w) {
      Rational r(x, total);
      r.canonicalize();
      row.push_back(r);
    }
    probs.push_back(std::move(row));
    costs.emplace_back(uniform(1, 9));
  }
  return DiscreteProductInstance(std::move(grid), std::move(probs), std::move(costs), k);
}

Json cmd_gen(const GenArgs& a) {
  const int sources = (!a.bernoulli.empty()) + (a.uniform > 0) + (!a.grid.empty()) +
                      (a.random > 0) + (!a.reduction.empty());
  if (sources != 1) {
    throw ValidationError(
        "gen needs exactly one of --bernoulli, --uniform, --grid, --random, --reduction");
  }
  if (!a.bernoulli.empty()) {
    const auto p = parse_rational_list(a.bernoulli);
    const auto c = parse_rational_list(a.costs);
    return io::instance_json(bernoulli_instance(p, c, a.k));
  }
  if (a.uniform > 0) {
    const auto c = parse_rational_list(a.costs);
    std::vector<OraclePtr> oracles(static_cast<std::size_t>(a.uniform), uniform_oracle());
    return io::instance_json(ContinuousInstance(oracles, c, a.k, parse_rational(a.alpha)));
  }
  if (!a.grid.empty()) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream ss(a.probs);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_rational_list(row));
    return io::instance_json(DiscreteProductInstance(parse_rational_list(a.grid), std::move(rows),
                                                     parse_rational_list(a.costs), a.k));
  }
  if (a.random > 0) return io::instance_json(random_instance(a.random, a.interior, a.k, a.seed));

  Json j;
  if (a.reduction == "vc-gadget") {
    const Graph g = parse_graph(a.graph);
    const auto [inst, cover] = graph_to_cover_gadget(g);
    j = io::instance_json(inst);
    j["cover"] = io::cover_json(cover);
    j["reduction"] = a.reduction;
    return j;
  }
  const auto numbers = parse_integers(a.partition);
  ThresholdInstance t = [&] {
    if (a.reduction == "k2") return partition_to_k2(numbers);
    if (a.reduction == "k3") return partition_to_k3(numbers);
    if (a.reduction == "numpart") return numpart_to_k(a.parts, numbers);
    throw ValidationError("unknown reduction \"" + a.reduction + "\"");
  }();
  j = io::instance_json(t.instance);
  j["gamma"] = io::rational_json(t.gamma);
  j["reduction"] = a.reduction;
  const bool yes = a.reduction == "numpart" ? numpart_is_yes(a.parts, numbers)
                                            : partition_is_yes(numbers);
  j["label"] = yes ? "yes" : "no";
  return j;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string instance, eps, gamma, kernel = "parallel";
  bool prune = false;
  std::uint64_t max_expansions = kDefaultMaxExpansions;
};

Json cmd_solve(const SolveArgs& a) {
  const io::AnyInstance inst = load_instance(a.instance);
  FptasOptions options;
  if (a.kernel == "reference") {
    options.kernel = Kernel::kReference;
  } else if (a.kernel != "parallel") {
    throw ValidationError("kernel must be reference or parallel");
  }
  options.symmetry_pruning = a.prune;
  options.max_expansions = a.max_expansions;
  Json j;
  if (const auto* d = std::get_if<DiscreteProductInstance>(&inst)) {
    if (a.eps.empty()) throw ValidationError("solve on a discrete instance needs --eps");
    const Rational eps = parse_rational(a.eps);
    const DiscreteSolution s = solve_discrete(*d, eps, options);
    j["cover"] = io::cover_json(s.cover);
    j["cost"] = io::rational_json(s.cost);
    j["guarantee"] = "1+" + format_rational(eps);
    j["diagnostics"] = io::diagnostics_json(s.diagnostics);
    j["diagnostics"]["candidate_cost"] = io::rational_json(s.candidate_cost);
  } else {
    const auto& c = std::get<ContinuousInstance>(inst);
    if (a.gamma.empty()) throw ValidationError("solve on a continuous instance needs --gamma");
    const ContinuousSolution s = solve_continuous(c, parse_rational(a.gamma), options);
    j["cover"] = io::cover_json(s.cover);
    j["cost"] = s.continuous_cost ? io::rational_json(*s.continuous_cost) : Json(nullptr);
    j["discrete_cost"] = io::rational_json(s.discrete_cost);
    j["guarantee"] = "1+" + format_rational(s.gamma);
    Json diag = io::diagnostics_json(s.diagnostics);
    diag["gamma"] = io::rational_json(s.gamma);
    diag["inner_eps"] = io::rational_json(s.inner_eps);
    diag["grid_interior"] = s.grid_interior;
    diag["warnings"] = s.warnings;
    j["diagnostics"] = diag;
  }
  j["kernel"] = a.kernel;
  return j;
}

// ---------------------------------------------------------------- others

Json cmd_brute(const std::string& path, std::uint64_t max_points) {
  const io::AnyInstance inst = load_instance(path);
  BruteForceOptions options;
  options.max_grid_points = max_points;
  const BruteForceResult r = brute_force_optimum(require_discrete(inst, "brute"), options);
  Json j;
  j["cover"] = io::cover_json(r.cover);
  j["cost"] = io::rational_json(r.cost);
  j["guarantee"] = "exact";
  j["diagnostics"] = {{"covers_evaluated", r.covers_evaluated}};
  return j;
}

Json cmd_eval(const std::string& instance_path, const std::string& cover_path) {
  const io::AnyInstance inst = load_instance(instance_path);
  const Cover cover = io::cover_from_json(io::read_json_file(cover_path));
  const Rational cost = std::visit([&](const auto& i) { return expected_cost(i, cover); }, inst);
  return {{"cover", io::cover_json(cover)}, {"cost", io::rational_json(cost)}, {"feasible", true}};
}

Json cmd_discretize(const std::string& path, const std::string& gamma) {
  const io::AnyInstance inst = load_instance(path);
  const Discretization d = discretize(require_continuous(inst, "discretize"), parse_rational(gamma));
  Json j = io::instance_json(d.instance);
  j["gamma"] = io::rational_json(d.gamma);
  j["epsilon"] = io::rational_json(d.grid.epsilon);
  j["alpha"] = io::rational_json(d.grid.alpha);
  j["grid_interior"] = d.grid.interior();
  j["warnings"] = d.warnings;
  return j;
}

Json cmd_count_vc(const std::string& text) {
  const Graph g = parse_graph(text);
  const Integer count = count_vertex_covers_via_cost(g);
  Json j;
  j["nodes"] = g.n;
  j["edges"] = g.edges.size();
  j["vertex_covers"] = count.get_str();
  Rational cost(count, Integer(1) << (g.n - 1));
  cost.canonicalize();
  cost += g.n - 2;
  j["gadget_cost"] = io::rational_json(cost);
  return j;
}

void cmd_plot(const std::string& instance_path, const std::string& cover_path,
              const std::string& svg, const std::string& csv, std::ostream& out) {
  const io::AnyInstance inst = load_instance(instance_path);
  const std::vector<Rational> costs =
      std::visit([](const auto& i) { return i.costs(); }, inst);
  if (costs.size() != 2) throw ValidationError("plot needs an instance with n = 2");
  const Cover cover = io::cover_from_json(io::read_json_file(cover_path));
  const auto cells = plot::dominance_cells(cover, costs);
  if (!svg.empty()) io::write_text(svg, plot::cells_svg(cover, cells));
  if (!csv.empty()) io::write_text(csv, plot::cells_csv(cells));
  if (svg.empty() && csv.empty()) out << plot::cells_csv(cells);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto colon = text.find(':');
  Graph g;
  try {
    g.n = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ValidationError("graph must look like \"n:u-v,...\", got \"" + text + "\"");
  }
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string edge;
    while (std::getline(ss, edge, ',')) {
      if (edge.empty()) continue;
      const auto dash = edge.find('-');
      if (dash == std::string::npos) throw ValidationError("edge \"" + edge + "\" needs u-v");
      try {
        g.edges.emplace_back(std::stoi(edge.substr(0, dash)), std::stoi(edge.substr(dash + 1)));
      } catch (const std::exception&) {
        throw ValidationError("edge \"" + edge + "\" needs integer endpoints");
      }
    }
  }
  validate_graph(g);
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto cover toolkit: exact evaluation, FPTAS and exhaustive search"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--decimal", common.decimal, "Add <key>_decimal fields rounded to 12 digits (display only)");

  auto output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", common.output, "Write JSON here instead of stdout");
  };

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--bernoulli", gen.bernoulli, "Bernoulli probabilities, e.g. 1/2,1/3");
  g->add_option("--uniform", gen.uniform, "Uniform measure on [0,1]^n (continuous)");
  g->add_option("--grid", gen.grid, "Grid values 0,...,1 for a general discrete instance");
  g->add_option("--probs", gen.probs, "Probability rows separated by ';'");
  g->add_option("--random", gen.random, "Random discrete instance with n coordinates");
  g->add_option("--interior", gen.interior, "Interior grid points for --random");
  g->add_option("--seed", gen.seed, "Seed for --random");
  g->add_option("--costs", gen.costs, "Costs c_1,...,c_n");
  g->add_option("--k", gen.k, "Cover size");
  g->add_option("--alpha", gen.alpha, "Lower bound on coordinate means (continuous)");
  g->add_option("--reduction", gen.reduction, "k2, k3, numpart or vc-gadget")
      ->check(CLI::IsMember({"k2", "k3", "numpart", "vc-gadget"}));
  g->add_option("--partition", gen.partition, "Positive integers for the reductions");
  g->add_option("--parts", gen.parts, "Number of parts for numpart");
  g->add_option("--graph", gen.graph, "Graph n:u-v,... for vc-gadget");
  output(g);

  SolveArgs solve;
  CLI::App* s = app.add_subcommand("solve", "Approximate optimum via the FPTAS");
  s->add_option("--instance", solve.instance, "Instance JSON")->required();
  s->add_option("--eps", solve.eps, "Accuracy for discrete instances");
  s->add_option("--gamma", solve.gamma, "Accuracy for continuous instances");
  s->add_option("--kernel", solve.kernel, "parallel (default) or reference");
  s->add_flag("--prune", solve.prune, "Experimental stage-1 symmetry pruning");
  s->add_option("--max-expansions", solve.max_expansions, "Work budget");
  output(s);

  std::string instance_path, cover_path, gamma, graph, svg, csv;
  std::uint64_t max_points = BruteForceOptions{}.max_grid_points;
  CLI::App* b = app.add_subcommand("brute", "Exact optimum by enumeration");
  b->add_option("--instance", instance_path, "Discrete instance JSON")->required();
  b->add_option("--max-points", max_points, "Cap on (M+2)^n");
  output(b);

  CLI::App* e = app.add_subcommand("eval", "Exact expected cost of a cover");
  e->add_option("--instance", instance_path, "Instance JSON")->required();
  e->add_option("--cover", cover_path, "Cover JSON")->required();
  output(e);

  CLI::App* d = app.add_subcommand("discretize", "Discretize a continuous instance");
  d->add_option("--instance", instance_path, "Continuous instance JSON")->required();
  d->add_option("--gamma", gamma, "Target accuracy")->required();
  output(d);

  CLI::App* c = app.add_subcommand("count-vc", "Count vertex covers through the cost identity");
  c->add_option("--graph", graph, "Graph n:u-v,...")->required();
  output(c);

  CLI::App* p = app.add_subcommand("plot", "Dominance regions of a two-dimensional cover");
  p->add_option("--instance", instance_path, "Instance JSON with n = 2")->required();
  p->add_option("--cover", cover_path, "Cover JSON")->required();
  p->add_option("--svg", svg, "SVG output path");
  p->add_option("--csv", csv, "CSV output path (stdout when neither path is given)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInput;
  }

  try {
    Json j;
    if (g->parsed()) {
      j = cmd_gen(gen);
    } else if (s->parsed()) {
      j = cmd_solve(solve);
    } else if (b->parsed()) {
      j = cmd_brute(instance_path, max_points);
    } else if (e->parsed()) {
      j = cmd_eval(instance_path, cover_path);
    } else if (d->parsed()) {
      j = cmd_discretize(instance_path, gamma);
    } else if (c->parsed()) {
      j = cmd_count_vc(graph);
    } else {
      cmd_plot(instance_path, cover_path, svg, csv, out);
      return kExitOk;
    }
    if (common.decimal) io::add_decimals(j, {"cost", "discrete_cost", "gamma", "gadget_cost"});
    emit(j, common, out);
    return kExitOk;
  } catch (const ResourceError& ex) {
    err << "resource limit: " << ex.what() << "\n";
    return kExitResource;
  } catch (const OracleContractError& ex) {
    err << "oracle contract violated: " << ex.what() << "\n";
    return kExitOracle;
  } catch (const InfeasibleCoverError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& ex) {
    err << "error: malformed JSON: " << ex.what() << "\n";
    return kExitInput;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace pareto_cover::cli
