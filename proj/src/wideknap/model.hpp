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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wideknap/geometry.hpp"
#include "wideknap/rational.hpp"

namespace wideknap {

struct Item {
  int id = 0;
  Rect rect;
  std::optional<int> color;  // 1..k once a coloring is applied
};

struct Instance {
  Box box;
  std::vector<Item> items;
  int k = 1;

  const Item* find(int id) const;
  // Throws InvalidArgument on duplicate ids, empty dimensions or k outside
  // [1, |items|].
  void check() const;
};

struct Placement {
  int id = 0;
  PlacedRect placed;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Packing {
  std::vector<Placement> placements;

  std::size_t size() const { return placements.size(); }
  const Placement* find(int id) const;
};

// Width granularity c = max(1, floor(ell^2 / n1)).
struct RoundingParams {
  Rational ell{1};
  int granularity = 1;

  static RoundingParams make(const Rational& ell, int n1);
};

Rational aspect_ratio(const Box& box);

// Width rounded up to a multiple of the granularity; height unchanged.
Rect round_rect(const Rect& r, const RoundingParams& params);
std::vector<Item> round_items(std::span<const Item> items,
                              const RoundingParams& params);

// Keeps, for every (width, color) class, the k items of smallest height.
// Ties are broken by id. Throws if any item is uncolored.
std::vector<Item> reduce_k(std::span<const Item> items, int k);

struct ValidationReport {
  bool ok = true;
  std::string check;   // name of the first failed check
  std::string detail;
};

ValidationReport validate_packing(const Instance& instance,
                                  const Packing& packing);
// Same checks against an arbitrary region; dimensions come from items.
ValidationReport validate_packing_in_region(std::span<const Item> items,
                                            const Packing& packing,
                                            const Region& region);

struct GeneratorProfile {
  int box_w_min = 4;
  int box_w_max = 6;
  int box_h_min = 2;
  int box_h_max = 6;
  Rational max_aspect{3};
  int items_min = 2;
  int items_max = 6;
  int width_min = 1;
  int width_max = 6;
  bool wide_only = true;
  int k = 1;
};

// Deterministic in (seed, profile).
Instance generate_instance(std::uint64_t seed, const GeneratorProfile& profile);

struct PackingProfile {
  Box box{12, 12};
  int min_width = 2;
  int max_width = 8;
  int max_height = 4;
  int attempts = 60;
  int max_items = 8;
};

// Random valid packing of wide rectangles with widths >= min_width, built by
// rejection sampling of placements. The instance lists exactly the placed
// items with k = number of placements.
std::pair<Instance, Packing> generate_packing(std::uint64_t seed,
                                              const PackingProfile& profile);

}  // namespace wideknap
