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

#include "wideknap/colorcode.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "wideknap/errors.hpp"

namespace wideknap {

int Coloring::color_of(int id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) {
    throw InvalidArgument("coloring: unknown item id " + std::to_string(id));
  }
  return colors[it - ids.begin()];
}

std::size_t randomized_family_size(int k, double failure_bound) {
  if (!(failure_bound > 0.0 && failure_bound < 1.0)) {
    throw InvalidArgument("coloring: failure bound must lie in (0, 1)");
  }
  return static_cast<std::size_t>(
      std::ceil(std::exp(static_cast<double>(k)) * std::log(1.0 / failure_bound)));
}

ColoringFamily ColoringFamily::build(std::span<const int> item_ids, int k,
                                     ColoringMode mode, std::uint64_t seed,
                                     double failure_bound,
                                     std::uint64_t exhaustive_budget) {
  if (k < 1) throw InvalidArgument("coloring: k must be positive");
  ColoringFamily f;
  f.mode_ = mode;
  f.k_ = k;
  f.seed_ = seed;
  f.failure_bound_ = failure_bound;
  f.ids_.assign(item_ids.begin(), item_ids.end());
  std::sort(f.ids_.begin(), f.ids_.end());
  if (std::adjacent_find(f.ids_.begin(), f.ids_.end()) != f.ids_.end()) {
    throw InvalidArgument("coloring: duplicate item id");
  }
  if (k == 1) {
    // Every coloring is the constant one.
    f.size_ = 1;
    if (mode == ColoringMode::randomized) {
      f.drawn_.push_back(std::vector<int>(f.ids_.size(), 1));
    }
    return f;
  }
  if (mode == ColoringMode::exhaustive) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < f.ids_.size(); ++i) {
      total *= static_cast<std::uint64_t>(k);
      if (total > exhaustive_budget) {
        throw BudgetExceeded("coloring: k^n exceeds the exhaustive budget");
      }
    }
    f.size_ = static_cast<std::size_t>(total);
    return f;
  }
  f.size_ = randomized_family_size(k, failure_bound);
  std::mt19937_64 rng(seed);
  f.drawn_.reserve(f.size_);
  for (std::size_t t = 0; t < f.size_; ++t) {
    std::vector<int> c(f.ids_.size());
    for (int& v : c) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    f.drawn_.push_back(std::move(c));
  }
  return f;
}

Coloring ColoringFamily::at(std::size_t index) const {
  if (index >= size_) throw InvalidArgument("coloring: index out of range");
  Coloring c;
  c.ids = ids_;
  if (mode_ == ColoringMode::randomized) {
    c.colors = drawn_[index];
    return c;
  }
  c.colors.assign(ids_.size(), 1);
  // Base-k digits, most significant first.
  std::size_t rest = index;
  for (std::size_t i = ids_.size(); i-- > 0;) {
    c.colors[i] = 1 + static_cast<int>(rest % static_cast<std::size_t>(k_));
    rest /= static_cast<std::size_t>(k_);
  }
  return c;
}

bool is_good_for(const Coloring& coloring, std::span<const int> subset_ids) {
  std::set<int> used;
  for (int id : subset_ids) {
    if (!used.insert(coloring.color_of(id)).second) return false;
  }
  return true;
}

}  // namespace wideknap
