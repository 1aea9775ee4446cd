// Copyright 2026 The wideknap Authors
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

#include <string>

#include <json.hpp>

#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"

namespace wideknap {

using Json = nlohmann::json;

// {"box":{"w":W,"h":H},"k":K,"items":[{"id":I,"w":W,"h":H}]}; an optional
// "color" per item is carried through.
Instance instance_from_json(const Json& j);
Json to_json(const Instance& instance);

// {"placements":[{"id":I,"x":X,"y":Y}]}. Dimensions are filled in from the
// instance, which must list every id.
Packing packing_from_json(const Json& j, const Instance& instance);
Json to_json(const Packing& packing);

Json to_json(const Polyline& p);
Json to_json(const Region& r);
// {"box":{...},"cells":[[x,y],...]}; a missing "cells" means the full box.
Region region_from_json(const Json& j);

GeneratorProfile profile_from_json(const Json& j);
Json to_json(const GeneratorProfile& p);

// Wraps nlohmann parse errors as ParseError.
Json parse_json_text(const std::string& text);

}  // namespace wideknap
