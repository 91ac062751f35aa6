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

#include "io.hpp"

#include <fstream>
#include <sstream>

#include "pareto_cover/errors.hpp"

namespace pareto_cover::io {

namespace {

std::vector<Rational> rational_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json rational_list_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string(key) + " must be an integer");
  return v.get<int>();
}

Json oracle_json(const MeasureOracle& oracle) {
  if (const auto* f = dynamic_cast<const FiniteSupportOracle*>(&oracle)) {
    Json atoms = Json::array();
    for (const auto& a : f->atoms()) {
      atoms.push_back({{"value", rational_json(a.value)}, {"mass", rational_json(a.mass)}});
    }
    return {{"kind", "finite"}, {"atoms", atoms}};
  }
  if (const auto* p = dynamic_cast<const PiecewiseConstantOracle*>(&oracle)) {
    return {{"kind", "piecewise"},
            {"breakpoints", rational_list_json(p->breakpoints())},
            {"densities", rational_list_json(p->densities())}};
  }
  if (dynamic_cast<const UniformOracle*>(&oracle) != nullptr) return {{"kind", "uniform"}};
  throw ValidationError("oracle kind " + oracle.kind() + " has no JSON form");
}

OraclePtr oracle_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ValidationError("oracle kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "uniform") return uniform_oracle();
  if (k == "finite") {
    std::vector<Atom> atoms;
    const Json& list = field(j, "atoms");
    if (!list.is_array()) throw ValidationError("atoms must be an array");
    for (const auto& a : list) {
      atoms.push_back({rational_from_json(field(a, "value")), rational_from_json(field(a, "mass"))});
    }
    return finite_support_oracle(std::move(atoms));
  }
  if (k == "piecewise") {
    return piecewise_constant_oracle(rational_list(field(j, "breakpoints"), "breakpoints"),
                                     rational_list(field(j, "densities"), "densities"));
  }
  throw ValidationError("unknown oracle kind \"" + k + "\"");
}

}  // namespace

Json rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw ValidationError("expected a rational string, got " + j.dump());
}

Json instance_json(const DiscreteProductInstance& inst) {
  Json probs = Json::array();
  for (const auto& row : inst.probs()) probs.push_back(rational_list_json(row));
  return {{"type", "discrete"},
          {"grid", rational_list_json(inst.grid())},
          {"probs", probs},
          {"costs", rational_list_json(inst.costs())},
          {"k", inst.k()}};
}

Json instance_json(const ContinuousInstance& inst) {
  Json oracles = Json::array();
  for (const auto& o : inst.oracles()) oracles.push_back(oracle_json(*o));
  return {{"type", "continuous"},
          {"oracles", oracles},
          {"costs", rational_list_json(inst.costs())},
          {"k", inst.k()},
          {"alpha", rational_json(inst.alpha())}};
}

AnyInstance instance_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) throw ValidationError("instance type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "discrete") {
    std::vector<std::vector<Rational>> probs;
    const Json& rows = field(j, "probs");
    if (!rows.is_array()) throw ValidationError("probs must be an array");
    for (const auto& row : rows) probs.push_back(rational_list(row, "probability row"));
    return DiscreteProductInstance(rational_list(field(j, "grid"), "grid"), std::move(probs),
                                   rational_list(field(j, "costs"), "costs"), int_field(j, "k"));
  }
  if (t == "continuous") {
    std::vector<OraclePtr> oracles;
    const Json& list = field(j, "oracles");
    if (!list.is_array()) throw ValidationError("oracles must be an array");
    for (const auto& o : list) oracles.push_back(oracle_from_json(o));
    return ContinuousInstance(std::move(oracles), rational_list(field(j, "costs"), "costs"),
                              int_field(j, "k"), rational_from_json(field(j, "alpha")));
  }
  throw ValidationError("unknown instance type \"" + t + "\"");
}

Json cover_json(const Cover& cover) {
  Json out = Json::array();
  for (const auto& p : cover.points) out.push_back(rational_list_json(p));
  return out;
}

Cover cover_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "cover") : j;
  if (!list.is_array()) throw ValidationError("cover must be an array of points");
  Cover cover;
  for (const auto& p : list) cover.points.push_back(rational_list(p, "cover point"));
  return cover;
}

Json diagnostics_json(const FptasDiagnostics& d) {
  Json sizes = Json::array();
  for (auto s : d.table_sizes) sizes.push_back(s);
  Json bound = {{"alpha_floor", d.bound.alpha_floor.get_str()},
                {"beta_floor", d.bound.beta_floor.get_str()},
                {"value", d.bound.value ? Json(d.bound.value->get_str()) : Json(nullptr)},
                {"holds", d.bound_holds}};
  return {{"delta", rational_json(d.delta)},
          {"table_sizes", sizes},
          {"total_candidates", d.total_candidates},
          {"expansions", d.expansions},
          {"table_bound", bound}};
}

void add_decimals(Json& j, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    if (j.contains(key) && j[key].is_string()) {
      j[std::string(key) + "_decimal"] = format_decimal(parse_rational(j[key].get<std::string>()));
    }
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

}  // namespace pareto_cover::io
