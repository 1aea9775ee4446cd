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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wideknap/colorcode.hpp"
#include "wideknap/exact.hpp"
#include "wideknap/geometry.hpp"
#include "wideknap/model.hpp"
#include "wideknap/rational.hpp"

namespace wideknap {

struct DpBudgets {
  std::uint64_t max_polylines = 200'000;
  std::uint64_t max_transitions = 20'000'000;
  std::uint64_t max_subsets = 2'000'000;
  std::uint64_t exact_node_budget = kDefaultNodeBudget;
};

// Remembers exact_pack answers across DP runs, keyed by region and sorted
// shape multiset. Witness positions are stored in sorted-shape order.
class FeasibilityCache {
 public:
  // nullopt: not cached. Otherwise the witness (empty optional if
  // infeasible) with ids taken from items.
  std::optional<std::optional<Packing>> lookup(const Region& region,
                                               std::vector<Item> items) const;
  void store(const Region& region, std::vector<Item> items,
             const std::optional<Packing>& witness);
  std::size_t size() const { return table_.size(); }

 private:
  static std::string key(const Region& region, const std::vector<Item>& sorted);
  std::unordered_map<std::string, std::optional<std::vector<PlacedRect>>> table_;
};

struct DpStats {
  std::uint64_t states = 0;
  std::uint64_t transitions = 0;
  std::uint64_t polylines = 0;
  std::uint64_t subsets = 0;
  std::uint64_t exact_calls = 0;
  std::uint64_t shortcut_hits = 0;
};

struct DpConfig {
  Rational eps{1, 2};
  Rational alpha{1};
  Coloring coloring;
  DpBudgets budgets;
  // Take the single-region transition at face value when the S1 search
  // proves it optimal; see dp_solve.
  bool certified_shortcut = true;
  FeasibilityCache* cache = nullptr;
  // Upper bound on polyline complexity; defaults to floor(4 / eps) + 1.
  std::optional<int> max_complexity;
  // Keep every computed state in DpResult::states.
  bool record_states = false;
};

struct DpStateRecord {
  Polyline polyline;
  std::uint32_t colors = 0;
  Packing value;
};

enum class DpVerdict { packing, no_packing, budget };

struct DpResult {
  DpVerdict verdict = DpVerdict::no_packing;
  Packing packing;  // best packing found, also on the no-verdict
  std::int64_t threshold = 0;
  DpStats stats;
  std::string budget_reason;
  std::vector<DpStateRecord> states;
};

// Every canonical polyline from the left to the right side of the box with
// integer breakpoints, at most max_complexity segments and horizontal first
// and last segments. A vertical segment on a box side would only change the
// closed point set, not the cells above or below, so those variants are
// left out. Throws BudgetExceeded past the budget.
std::vector<Polyline> enumerate_polylines(Box box, int max_complexity,
                                          std::uint64_t budget = 200'000);

struct RegionSolution {
  Packing packing;
  bool from_rounded = false;
  // S1 is below its cap, so no larger distinctly colored packing exists.
  bool certified = false;
};

// S1: largest subset of items with at most floor(2 / eps^2) members whose
// colors are distinct and allowed, packed by exact_pack. S2: the same over
// reduced_rounded with at most k members, translated back to the original
// rectangles. Returns the larger; ties go to S1. Items must be colored.
RegionSolution solve_region(const Region& region, const std::vector<Item>& items,
                            std::uint32_t colors_allowed, const Rational& eps, int k,
                            const std::vector<Item>& reduced_rounded,
                            const DpBudgets& budgets = {}, DpStats* stats = nullptr,
                            FeasibilityCache* cache = nullptr);

// DP over (polyline on the doubled grid, color set). The value of a state is
// the largest union of a predecessor state value and a region solution
// between the predecessor polyline and this one. With certified_shortcut,
// the transition from the bottom side with all colors is tried first and
// accepted when solve_region certifies it, since no DP value can exceed the
// best distinctly colored packing below the polyline.
DpResult dp_solve(const Instance& instance, const DpConfig& config);

const char* to_string(DpVerdict v);

}  // namespace wideknap
