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
#include <span>
#include <vector>

namespace wideknap {

enum class ColoringMode { exhaustive, randomized };

// Assignment of a color in 1..k to each item id of a fixed id list.
struct Coloring {
  std::vector<int> ids;     // sorted
  std::vector<int> colors;  // parallel to ids

  int color_of(int id) const;
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 100000;

class ColoringFamily {
 public:
  // Exhaustive: all k^n colorings in lexicographic order of the sorted ids;
  // throws BudgetExceeded when k^n exceeds exhaustive_budget.
  // Randomized: ceil(e^k ln(1 / failure_bound)) independent uniform
  // colorings drawn from seed.
  static ColoringFamily build(std::span<const int> item_ids, int k,
                              ColoringMode mode, std::uint64_t seed = 0,
                              double failure_bound = 0.01,
                              std::uint64_t exhaustive_budget =
                                  kDefaultExhaustiveBudget);

  std::size_t size() const { return size_; }
  Coloring at(std::size_t index) const;

  ColoringMode mode() const { return mode_; }
  int k() const { return k_; }
  std::uint64_t seed() const { return seed_; }
  double failure_bound() const { return failure_bound_; }

 private:
  ColoringMode mode_ = ColoringMode::exhaustive;
  int k_ = 1;
  std::uint64_t seed_ = 0;
  double failure_bound_ = 0.0;
  std::vector<int> ids_;
  std::size_t size_ = 0;
  std::vector<std::vector<int>> drawn_;  // randomized colorings
};

std::size_t randomized_family_size(int k, double failure_bound);

// The coloring is injective on the subset.
bool is_good_for(const Coloring& coloring, std::span<const int> subset_ids);

}  // namespace wideknap
