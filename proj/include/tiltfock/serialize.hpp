// Copyright 2026 The tiltfock Authors
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

#pragma once

#include "tiltfock/bridge.hpp"
#include "tiltfock/fock.hpp"
#include "tiltfock/laurent.hpp"
#include "tiltfock/pattern.hpp"
#include "tiltfock/singular.hpp"

#include <json.hpp>

#include <string>

namespace tiltfock {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const Partition& p);
Json to_json(const Weight& w);
Json to_json(const Orbit& o);
Json to_json(const Pattern& p);
Json to_json(const BlockPattern& p);
Json to_json(const DecompositionMatrix& d);
Json to_json(const Report& r);

std::string laurent_latex(const LaurentPoly& p);
std::string render_latex(const DecompositionMatrix& d);
std::string render_table(const DecompositionMatrix& d);
std::string render_latex(const Pattern& p, bool with_values_at_one);
std::string render_table(const Pattern& p, bool with_values_at_one);
/// One "G([2]) = |[2]> + q|[1,1]>" line per canonical basis element.
std::string render_expansions(int l, int n);

}  // namespace tiltfock
