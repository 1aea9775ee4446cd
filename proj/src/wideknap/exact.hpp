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
#include <vector>

#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"

namespace wideknap {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct ExactItem {
  int id = 0;
  Rect rect;
};

struct ExactQuery {
  std::vector<ExactItem> rects;
  Region region;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

enum class ExactStatus { feasible, infeasible, budget };

struct ExactResult {
  ExactStatus status = ExactStatus::infeasible;
  Packing witness;  // set when feasible
  std::uint64_t nodes = 0;
};

// Decides whether all rectangles pack into the region. Each search node
// places one rectangle at a position that fits and cannot move one unit
// left or down inside the free cells, then recurses on the carved region.
// Failed (region, multiset) states are memoized.
ExactResult exact_pack(const ExactQuery& query);

// The rectangle fits in the free region and cannot move one unit left or
// one unit down within it.
bool is_flush(const PlacedRect& r, const Region& free_cells);

// Repeatedly moves rectangles one unit left or down while the packing stays
// valid inside the region. Terminates because coordinates only decrease.
Packing push_bottom_left(Packing packing, const Region& region);

const char* to_string(ExactStatus s);

}  // namespace wideknap
