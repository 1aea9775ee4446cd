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

#include "wideknap/oracle.hpp"

#include <algorithm>
#include <set>

namespace wideknap::oracle {
namespace {

struct Enumerator {
  const std::vector<OracleItem>& rects;
  const Region& region;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<PlacedRect> placed;
  bool out_of_budget = false;

  bool place(std::size_t i, int min_pos) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (i == rects.size()) return true;
    const Box& b = region.bounds();
    const Rect r = rects[i].rect;
    const bool same_as_prev = i > 0 && rects[i - 1].rect == r;
    for (int y = 0; y + r.h <= b.n2; ++y) {
      for (int x = 0; x + r.w <= b.n1; ++x) {
        const int pos = y * b.n1 + x;
        if (same_as_prev && pos <= min_pos) continue;
        const PlacedRect cand{r, x, y};
        if (!region.contains(cand)) continue;
        bool clash = false;
        for (const PlacedRect& p : placed) {
          if (overlaps(p, cand)) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        placed.push_back(cand);
        if (place(i + 1, pos)) return true;
        placed.pop_back();
        if (out_of_budget) return false;
      }
    }
    return false;
  }
};

}  // namespace

SubsetResult feasible_subset(const std::vector<OracleItem>& rects,
                             const Region& region, std::uint64_t node_budget) {
  std::vector<OracleItem> order = rects;
  std::stable_sort(order.begin(), order.end(),
                   [](const OracleItem& a, const OracleItem& b) {
                     return b.rect < a.rect;
                   });
  Enumerator e{order, region, node_budget, 0, {}, false};
  SubsetResult res;
  const bool ok = e.place(0, -1);
  res.nodes = e.nodes;
  if (ok) {
    res.status = OracleStatus::feasible;
    for (std::size_t i = 0; i < order.size(); ++i) {
      res.witness.placements.push_back({order[i].id, e.placed[i]});
    }
  } else {
    res.status = e.out_of_budget ? OracleStatus::budget : OracleStatus::infeasible;
  }
  return res;
}

OptResult opt_pack(const Instance& instance, std::uint64_t node_budget) {
  const int n = static_cast<int>(instance.items.size());
  const Region box = Region::full(instance.box);
  OptResult out;
  std::uint64_t left = node_budget;
  for (int size = n; size >= 1; --size) {
    std::set<std::vector<Rect>> tried;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<OracleItem> subset;
      std::vector<Rect> shapes;
      for (int i : pick) {
        subset.push_back({instance.items[i].id, instance.items[i].rect});
        shapes.push_back(instance.items[i].rect);
      }
      std::sort(shapes.begin(), shapes.end());
      if (tried.insert(shapes).second) {
        const SubsetResult r = feasible_subset(subset, box, left);
        out.nodes += r.nodes;
        left = r.nodes >= left ? 0 : left - r.nodes;
        if (r.status == OracleStatus::feasible) {
          out.opt = size;
          out.packing = r.witness;
          return out;
        }
        if (r.status == OracleStatus::budget) {
          out.status = OracleStatus::budget;
          return out;
        }
      }
      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.opt = 0;
  return out;
}

}  // namespace wideknap::oracle
