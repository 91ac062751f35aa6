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

// JSON forms of instances, covers and solver results. Every rational is a
// "num/den" string.

#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "pareto_cover/fptas.hpp"
#include "pareto_cover/measures.hpp"

namespace pareto_cover::io {

using Json = nlohmann::json;
using AnyInstance = std::variant<DiscreteProductInstance, ContinuousInstance>;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json instance_json(const DiscreteProductInstance& inst);
Json instance_json(const ContinuousInstance& inst);
AnyInstance instance_from_json(const Json& j);

Json cover_json(const Cover& cover);
// Accepts either {"cover": [...]} or a bare array of points.
Cover cover_from_json(const Json& j);

Json diagnostics_json(const FptasDiagnostics& d);

// Adds "<key>_decimal" next to every rational string field named in keys.
void add_decimals(Json& j, std::initializer_list<const char*> keys);

Json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace pareto_cover::io
