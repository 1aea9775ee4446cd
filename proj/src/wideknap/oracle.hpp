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
#include <vector>

#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"

namespace wideknap::oracle {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleItem {
  int id = 0;
  Rect rect;
};

enum class OracleStatus { feasible, infeasible, budget };

struct SubsetResult {
  OracleStatus status = OracleStatus::infeasible;
  Packing witness;
  std::uint64_t nodes = 0;
};

// Places the rectangles, largest shape first, one after another at every lexicographic (y, x)
// position that keeps them inside the region and off the earlier ones.
// Copies of one shape are placed at increasing positions; no other pruning.
SubsetResult feasible_subset(const std::vector<OracleItem>& rects,
                             const Region& region,
                             std::uint64_t node_budget = kDefaultOracleBudget);

struct OptResult {
  OracleStatus status = OracleStatus::feasible;  // budget if undecided
  int opt = 0;
  Packing packing;
  std::uint64_t nodes = 0;
};

// Maximum number of items that pack into the box, by trying subsets in
// decreasing size. The node budget is shared by all subset checks.
OptResult opt_pack(const Instance& instance,
                   std::uint64_t node_budget = kDefaultOracleBudget);

}  // namespace wideknap::oracle
