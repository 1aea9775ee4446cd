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

#include "wideknap/dp.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "wideknap/errors.hpp"

namespace wideknap {
namespace {

bool by_shape(const Item& a, const Item& b) {
  return std::tie(a.rect, a.id) < std::tie(b.rect, b.id);
}

std::uint32_t bit_of(int color) { return std::uint32_t{1} << (color - 1); }

// Feasibility of one candidate set, through the cache when there is one.
std::optional<Packing> packs(const Region& region, const std::vector<Item>& set,
                             const DpBudgets& budgets, DpStats& stats,
                             FeasibilityCache* cache) {
  if (cache) {
    if (auto hit = cache->lookup(region, set)) return *hit;
  }
  ExactQuery q;
  q.region = region;
  q.node_budget = budgets.exact_node_budget;
  for (const Item& it : set) q.rects.push_back({it.id, it.rect});
  ++stats.exact_calls;
  const ExactResult r = exact_pack(q);
  if (r.status == ExactStatus::budget) {
    throw BudgetExceeded("exact_pack node budget exhausted inside a region");
  }
  std::optional<Packing> out;
  if (r.status == ExactStatus::feasible) out = r.witness;
  if (cache) cache->store(region, set, out);
  return out;
}

// Largest set of at most max_size candidates with pairwise distinct colors
// that packs into the region, trying sizes down to min_size.
Packing best_subset(const Region& region, const std::vector<Item>& candidates,
                    int max_size, int min_size, const DpBudgets& budgets,
                    DpStats& stats, FeasibilityCache* cache) {
  // Per color, copies of one shape are interchangeable.
  std::map<int, std::vector<Item>> by_color;
  for (const Item& it : candidates) {
    auto& v = by_color[*it.color];
    if (std::none_of(v.begin(), v.end(),
                     [&](const Item& o) { return o.rect == it.rect; })) {
      v.push_back(it);
    }
  }
  std::vector<std::vector<Item>> groups;
  for (auto& [c, v] : by_color) {
    std::sort(v.begin(), v.end(), by_shape);
    groups.push_back(v);
  }
  const int colors = static_cast<int>(groups.size());
  const std::int64_t room = region.size();
  for (int size = std::min(max_size, colors); size >= std::max(min_size, 1); --size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<std::size_t> choice(size, 0);
      while (true) {
        std::vector<Item> set;
        std::int64_t area = 0;
        for (int i = 0; i < size; ++i) {
          set.push_back(groups[pick[i]][choice[i]]);
          area += set.back().rect.area();
        }
        if (area <= room) {
          if (++stats.subsets > budgets.max_subsets) {
            throw BudgetExceeded("subset budget exhausted in solve_region");
          }
          std::sort(set.begin(), set.end(), by_shape);
          if (auto w = packs(region, set, budgets, stats, cache)) return *w;
        }
        int i = size - 1;
        while (i >= 0 && choice[i] + 1 == groups[pick[i]].size()) choice[i--] = 0;
        if (i < 0) break;
        ++choice[i];
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == colors - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

int distinct_colors(const std::vector<Item>& items) {
  std::uint32_t mask = 0;
  for (const Item& it : items) mask |= bit_of(*it.color);
  return std::popcount(mask);
}

void enumerate_heights(int n1, int n2, int changes_left, std::vector<int>& h,
                       std::vector<Polyline>& out, std::uint64_t budget) {
  const int c = static_cast<int>(h.size());
  if (c == n1) {
    if (out.size() >= budget) {
      throw BudgetExceeded("polyline enumeration exceeded " +
                           std::to_string(budget) + " polylines");
    }
    out.push_back(Polyline::from_heights(h));
    return;
  }
  for (int y = 0; y <= n2; ++y) {
    const bool change = c > 0 && y != h.back();
    if (change && changes_left == 0) continue;
    h.push_back(y);
    enumerate_heights(n1, n2, changes_left - (change ? 1 : 0), h, out, budget);
    h.pop_back();
  }
}

class Dp {
 public:
  Dp(const Instance& inst, const DpConfig& config, std::vector<Item> items,
     std::vector<Item> reduced, DpResult& result)
      : inst_(inst), config_(config), items_(std::move(items)),
        reduced_(std::move(reduced)), result_(result),
        dbox_(scaled(inst.box, 2)),
        bottom_(Polyline::horizontal(0, dbox_.n1)),
        top_(Polyline::horizontal(dbox_.n2, dbox_.n1)) {}

  Packing solve(std::uint32_t colors) { return value_of(top_, colors); }

 private:
  const RegionSolution& region_solution(const Polyline& low, const Polyline& high,
                                        std::uint32_t colors) {
    const Region cells = cells_between(low, high, dbox_).coarsened();
    std::string key = cells.key();
    key.append(reinterpret_cast<const char*>(&colors), sizeof(colors));
    auto it = regions_.find(key);
    if (it != regions_.end()) return it->second;
    RegionSolution sol = solve_region(cells, items_, colors, config_.eps, inst_.k,
                                      reduced_, config_.budgets, &result_.stats,
                                      config_.cache);
    return regions_.emplace(std::move(key), std::move(sol)).first->second;
  }

  const std::vector<Polyline>& polylines() {
    if (!polylines_) {
      const int cmax = config_.max_complexity.value_or(
          static_cast<int>(floor_of(4 / config_.eps)) + 1);
      polylines_ = enumerate_polylines(dbox_, cmax, config_.budgets.max_polylines);
      result_.stats.polylines = polylines_->size();
    }
    return *polylines_;
  }

  std::string state_key(const Polyline& p, std::uint32_t colors) const {
    std::string key;
    for (int h : p.column_heights()) key.push_back(static_cast<char>(h));
    key.append(reinterpret_cast<const char*>(&colors), sizeof(colors));
    return key;
  }

  Packing value_of(const Polyline& p, std::uint32_t colors) {
    if (p == bottom_ || colors == 0) return {};
    const std::string key = state_key(p, colors);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++result_.stats.states;
    Packing best;
    bool done = false;
    if (config_.certified_shortcut) {
      const RegionSolution& sol = region_solution(bottom_, p, colors);
      if (sol.certified) {
        best = sol.packing;
        done = true;
        ++result_.stats.shortcut_hits;
      }
    }
    if (!done) {
      for (const Polyline& prev : polylines()) {
        if (prev == p || !polyline_below(prev, p)) continue;
        // Every subset of the color set, the full set first.
        std::uint32_t sub = colors;
        while (true) {
          if (++result_.stats.transitions > config_.budgets.max_transitions) {
            throw BudgetExceeded("DP transition budget exhausted");
          }
          const Packing below = value_of(prev, colors & ~sub);
          const RegionSolution& sol = region_solution(prev, p, sub);
          if (below.size() + sol.packing.size() > best.size()) {
            best = below;
            best.placements.insert(best.placements.end(),
                                   sol.packing.placements.begin(),
                                   sol.packing.placements.end());
          }
          if (sub == 0) break;
          sub = (sub - 1) & colors;
        }
      }
    }
    if (config_.record_states) result_.states.push_back({p, colors, best});
    return memo_.emplace(key, std::move(best)).first->second;
  }

  const Instance& inst_;
  const DpConfig& config_;
  std::vector<Item> items_;
  std::vector<Item> reduced_;
  DpResult& result_;
  Box dbox_;
  Polyline bottom_;
  Polyline top_;
  std::optional<std::vector<Polyline>> polylines_;
  std::unordered_map<std::string, Packing> memo_;
  std::unordered_map<std::string, RegionSolution> regions_;
};

}  // namespace

std::string FeasibilityCache::key(const Region& region,
                                  const std::vector<Item>& sorted) {
  std::string k = region.key();
  for (const Item& it : sorted) {
    k.append(reinterpret_cast<const char*>(&it.rect.w), sizeof(int));
    k.append(reinterpret_cast<const char*>(&it.rect.h), sizeof(int));
  }
  return k;
}

std::optional<std::optional<Packing>> FeasibilityCache::lookup(
    const Region& region, std::vector<Item> items) const {
  std::sort(items.begin(), items.end(), by_shape);
  auto it = table_.find(key(region, items));
  if (it == table_.end()) return std::nullopt;
  if (!it->second) return std::optional<Packing>{};
  Packing p;
  for (std::size_t i = 0; i < items.size(); ++i) {
    p.placements.push_back({items[i].id, (*it->second)[i]});
  }
  return std::optional<Packing>{p};
}

void FeasibilityCache::store(const Region& region, std::vector<Item> items,
                             const std::optional<Packing>& witness) {
  std::sort(items.begin(), items.end(), by_shape);
  std::optional<std::vector<PlacedRect>> positions;
  if (witness) {
    // Hand out the witness slots of each shape in sorted-item order.
    std::vector<Placement> pool = witness->placements;
    positions.emplace();
    for (const Item& it : items) {
      auto slot = std::find_if(pool.begin(), pool.end(), [&](const Placement& p) {
        return p.placed.rect == it.rect;
      });
      positions->push_back(slot->placed);
      pool.erase(slot);
    }
  }
  table_[key(region, items)] = std::move(positions);
}

std::vector<Polyline> enumerate_polylines(Box box, int max_complexity,
                                          std::uint64_t budget) {
  if (max_complexity < 1) {
    throw InvalidArgument("enumerate_polylines: max_complexity must be >= 1");
  }
  std::vector<Polyline> out;
  std::vector<int> h;
  enumerate_heights(box.n1, box.n2, (max_complexity - 1) / 2, h, out, budget);
  return out;
}

RegionSolution solve_region(const Region& region, const std::vector<Item>& items,
                            std::uint32_t colors_allowed, const Rational& eps, int k,
                            const std::vector<Item>& reduced_rounded,
                            const DpBudgets& budgets, DpStats* stats,
                            FeasibilityCache* cache) {
  DpStats local;
  DpStats& st = stats ? *stats : local;
  auto allowed = [&](const std::vector<Item>& src) {
    std::vector<Item> out;
    for (const Item& it : src) {
      if (!it.color) throw InvalidArgument("solve_region: item without color");
      if (*it.color < 1 || *it.color > 32) {
        throw InvalidArgument("solve_region: color outside 1..32");
      }
      if (colors_allowed & bit_of(*it.color)) out.push_back(it);
    }
    return out;
  };
  RegionSolution sol;
  if (region.empty()) {
    sol.certified = true;
    return sol;
  }
  const std::vector<Item> originals = allowed(items);
  const int cap = static_cast<int>(floor_of(2 / (eps * eps)));
  const int colors = distinct_colors(originals);
  sol.packing = best_subset(region, originals, cap, 1, budgets, st, cache);
  const int s1 = static_cast<int>(sol.packing.size());
  sol.certified = s1 < cap || s1 == colors;

  const std::vector<Item> rounded = allowed(reduced_rounded);
  const int upper = std::min(k, distinct_colors(rounded));
  if (upper > s1) {
    const Packing s2 = best_subset(region, rounded, upper, s1 + 1, budgets, st, cache);
    if (s2.size() > sol.packing.size()) {
      Packing translated;
      for (const Placement& p : s2.placements) {
        auto src = std::find_if(items.begin(), items.end(),
                                [&](const Item& it) { return it.id == p.id; });
        if (src == items.end()) {
          throw InvalidArgument("solve_region: rounded item without a source");
        }
        translated.placements.push_back({p.id, PlacedRect{src->rect, p.placed.x, p.placed.y}});
      }
      sol.packing = std::move(translated);
      sol.from_rounded = true;
    }
  }
  return sol;
}

DpResult dp_solve(const Instance& instance, const DpConfig& config) {
  instance.check();
  if (config.eps <= 0) throw InvalidArgument("dp_solve: eps must be positive");
  if (instance.k > 32) throw InvalidArgument("dp_solve: k above 32 is unsupported");
  for (const Item& it : instance.items) {
    if (!it.rect.is_wide()) {
      throw InvalidArgument("dp_solve: item " + std::to_string(it.id) + " is not wide");
    }
    if (Rational(it.rect.w) * config.alpha < instance.box.n1) {
      throw InvalidArgument("dp_solve: item " + std::to_string(it.id) +
                            " is narrower than n1 / alpha");
    }
  }
  std::vector<Item> items = instance.items;
  for (Item& it : items) {
    it.color = config.coloring.color_of(it.id);
    if (*it.color < 1 || *it.color > instance.k) {
      throw InvalidArgument("dp_solve: coloring uses a color outside 1..k");
    }
  }
  const Rational ell = Rational(instance.box.n1) / (2 * config.alpha);
  const RoundingParams params = RoundingParams::make(ell, instance.box.n1);
  std::vector<Item> reduced = reduce_k(round_items(items, params), instance.k);

  DpResult result;
  result.threshold = std::max<std::int64_t>(0, ceil_of((1 - 3 * config.eps) * instance.k));
  Dp dp(instance, config, items, std::move(reduced), result);
  try {
    result.packing = dp.solve((std::uint32_t{1} << instance.k) - 1);
  } catch (const BudgetExceeded& e) {
    result.verdict = DpVerdict::budget;
    result.budget_reason = e.what();
    return result;
  }
  Instance colored = instance;
  colored.items = items;
  const ValidationReport valid = validate_packing(colored, result.packing);
  if (!valid.ok) {
    throw InvariantViolation("dp_solve produced an invalid packing: " + valid.check);
  }
  std::uint32_t used = 0;
  for (const Placement& p : result.packing.placements) {
    const std::uint32_t b = bit_of(*colored.find(p.id)->color);
    if (used & b) throw InvariantViolation("dp_solve reused a color");
    used |= b;
  }
  result.verdict = static_cast<std::int64_t>(result.packing.size()) >= result.threshold
                       ? DpVerdict::packing
                       : DpVerdict::no_packing;
  return result;
}

const char* to_string(DpVerdict v) {
  switch (v) {
    case DpVerdict::packing: return "packing";
    case DpVerdict::no_packing: return "no-packing";
    case DpVerdict::budget: return "inconclusive-budget";
  }
  return "unknown";
}

}  // namespace wideknap
