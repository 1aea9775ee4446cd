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

#include "wideknap/json_io.hpp"

#include "wideknap/errors.hpp"

namespace wideknap {
namespace {

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

Box box_from_json(const Json& j) {
  const Json b = required<Json>(j, "box");
  return Box{required<int>(b, "w"), required<int>(b, "h")};
}

Json box_json(const Box& b) { return Json{{"w", b.n1}, {"h", b.n2}}; }

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("box") || !j.contains("items")) {
    throw ParseError("instance needs 'box' and 'items'");
  }
  Instance inst;
  inst.box = box_from_json(j);
  for (const Json& e : j.at("items")) {
    Item it;
    it.id = required<int>(e, "id");
    it.rect = Rect{required<int>(e, "w"), required<int>(e, "h")};
    if (e.contains("color")) it.color = required<int>(e, "color");
    inst.items.push_back(it);
  }
  inst.k = j.contains("k") ? required<int>(j, "k")
                           : static_cast<int>(inst.items.size());
  inst.check();
  return inst;
}

Json to_json(const Instance& instance) {
  Json items = Json::array();
  for (const Item& it : instance.items) {
    Json e{{"id", it.id}, {"w", it.rect.w}, {"h", it.rect.h}};
    if (it.color) e["color"] = *it.color;
    items.push_back(e);
  }
  return Json{{"box", box_json(instance.box)},
              {"k", instance.k},
              {"items", items}};
}

Packing packing_from_json(const Json& j, const Instance& instance) {
  if (!j.is_object() || !j.contains("placements")) {
    throw ParseError("packing needs 'placements'");
  }
  Packing p;
  for (const Json& e : j.at("placements")) {
    const int id = required<int>(e, "id");
    const Item* it = instance.find(id);
    if (!it) throw ParseError("packing refers to unknown id " + std::to_string(id));
    p.placements.push_back(
        {id, PlacedRect{it->rect, required<int>(e, "x"), required<int>(e, "y")}});
  }
  return p;
}

Json to_json(const Packing& packing) {
  Json pl = Json::array();
  for (const Placement& p : packing.placements) {
    pl.push_back(Json{{"id", p.id}, {"x", p.placed.x}, {"y", p.placed.y}});
  }
  return Json{{"placements", pl}};
}

Json to_json(const Polyline& p) {
  Json pts = Json::array();
  for (const Point& q : p.breakpoints()) pts.push_back(Json::array({q.x, q.y}));
  return pts;
}

Json to_json(const Region& r) {
  Json cells = Json::array();
  for (const Point& c : r.cells()) cells.push_back(Json::array({c.x, c.y}));
  return Json{{"box", box_json(r.bounds())}, {"cells", cells}};
}

Region region_from_json(const Json& j) {
  const Box box = box_from_json(j);
  if (!j.contains("cells")) return Region::full(box);
  Region r(box);
  for (const Json& c : j.at("cells")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("cell must be [x, y]");
    try {
      r.insert(c[0].get<int>(), c[1].get<int>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return r;
}

GeneratorProfile profile_from_json(const Json& j) {
  GeneratorProfile p;
  auto opt = [&](const char* key, int& field) {
    if (j.contains(key)) field = required<int>(j, key);
  };
  opt("box_w_min", p.box_w_min);
  opt("box_w_max", p.box_w_max);
  opt("box_h_min", p.box_h_min);
  opt("box_h_max", p.box_h_max);
  opt("items_min", p.items_min);
  opt("items_max", p.items_max);
  opt("width_min", p.width_min);
  opt("width_max", p.width_max);
  opt("k", p.k);
  if (j.contains("max_aspect")) {
    p.max_aspect = parse_rational(required<std::string>(j, "max_aspect"));
  }
  if (j.contains("wide_only")) p.wide_only = required<bool>(j, "wide_only");
  return p;
}

Json to_json(const GeneratorProfile& p) {
  return Json{{"box_w_min", p.box_w_min},   {"box_w_max", p.box_w_max},
              {"box_h_min", p.box_h_min},   {"box_h_max", p.box_h_max},
              {"items_min", p.items_min},   {"items_max", p.items_max},
              {"width_min", p.width_min},   {"width_max", p.width_max},
              {"k", p.k},                   {"max_aspect", to_string(p.max_aspect)},
              {"wide_only", p.wide_only}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace wideknap
